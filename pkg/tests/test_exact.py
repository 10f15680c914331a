from math import comb

import pytest
from hypothesis import given, settings

from tmconn.canon import enumerate_connected
from tmconn.coloring import TotalColoring, count_colors, is_tmc
from tmconn.exact import SolverCapError, pair_capacity_bound, tmc_exact
from tmconn.graph import Graph, complete_graph, complete_multipartite, cycle_graph, path_graph, star_graph
from tmconn.spanning import leaf_number

from .conftest import connected_graphs


def partitions_into(items, blocks):
    """All set partitions of ``items`` into exactly ``blocks`` labelled-by-first-element blocks."""
    if not items:
        if blocks == 0:
            yield []
        return
    first, rest = items[0], items[1:]
    for part in partitions_into(rest, blocks - 1):
        yield [[first]] + part
    for part in partitions_into(rest, blocks):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_tmc(g):
    """Largest block count of a set partition of edges+vertices that is a TMC-coloring."""
    items = [("e", e) for e in g.edges] + [("v", v) for v in range(g.n)]
    for blocks in range(len(items), 0, -1):
        for part in partitions_into(items, blocks):
            ecol, vcol = {}, [0] * g.n
            for c, block in enumerate(part):
                for kind, x in block:
                    if kind == "e":
                        ecol[x] = c
                    else:
                        vcol[x] = c
            if is_tmc(g, TotalColoring(ecol, vcol)):
                return blocks
    raise AssertionError("no TMC-coloring")


@pytest.mark.parametrize("n", [2, 3, 4])
def test_simple_mode_matches_definition_brute_force(n):
    for g in enumerate_connected(n):
        assert tmc_exact(g).value == brute_tmc(g), g


def test_spec_examples():
    assert tmc_exact(complete_graph(4)).value == 10
    assert tmc_exact(path_graph(4)).value == 3
    assert tmc_exact(complete_multipartite([2, 2, 1])).value == 9
    assert tmc_exact(cycle_graph(4)).value == 4


@pytest.mark.parametrize("mode", ["simple", "unrestricted"])
def test_result_invariants(mode):
    for g in enumerate_connected(5):
        res = tmc_exact(g, mode)
        assert res.value == g.m + g.n - res.waste
        assert is_tmc(g, res.witness)
        assert count_colors(res.witness) == res.value


def test_modes_agree_up_to_order_5():
    checked = 0
    for n in range(1, 6):
        for g in enumerate_connected(n):
            assert tmc_exact(g, "simple").value == tmc_exact(g, "unrestricted").value
            checked += 1
    assert checked == 31


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_sandwich(g):
    value = tmc_exact(g).value
    assert g.m - g.n + 2 + leaf_number(g) <= value <= g.m + g.n
    assert (value == g.m + g.n) == g.is_complete()


def test_search_trees_respect_pair_capacity():
    for g in enumerate_connected(6):
        res = tmc_exact(g)
        if res.trees is not None:
            assert res.trees.pair_capacity() >= len(g.nonadjacent_pairs())
            assert res.trees.is_simple()


def test_trees_and_stars():
    for n in range(3, 9):
        assert tmc_exact(star_graph(n)).value == n
        assert tmc_exact(path_graph(n)).value == 3


def test_caps_are_errors():
    with pytest.raises(SolverCapError):
        tmc_exact(complete_graph(9))
    with pytest.raises(SolverCapError):
        tmc_exact(path_graph(6), "unrestricted")
    with pytest.raises(ValueError):
        tmc_exact(Graph.from_edges(3, [(0, 1)]))
    with pytest.raises(ValueError):
        tmc_exact(path_graph(3), "fast")


def test_deterministic_witness():
    g = cycle_graph(6)
    assert tmc_exact(g).witness == tmc_exact(g).witness


def test_pair_capacity_bound_small_values():
    lb = pair_capacity_bound(10, 6)
    # a 3-vertex tree covers 1 pair for 2, a 4-vertex tree 3 pairs for 3, a 5-vertex tree 6 pairs for 4
    assert lb[:4] == [0, 2, 3, 3]
    assert lb[6] == 4
    assert all(a <= b for a, b in zip(lb, lb[1:]))


def test_pair_capacity_bound_admissible():
    # every census optimum satisfies waste >= lb[number of nonadjacent pairs]
    for g in enumerate_connected(6):
        npairs = comb(6, 2) - g.m
        assert tmc_exact(g).waste >= pair_capacity_bound(npairs, 6)[npairs]
