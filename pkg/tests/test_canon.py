import random
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from tmconn.canon import canonical_form, enumerate_connected, enumerate_graphs
from tmconn.graph import Graph, complete_graph, is_connected, path_graph

from .conftest import graphs
from .oracles import brute_canonical, brute_connected_classes, connected_counts


def test_p3_relabelings_agree():
    assert canonical_form(Graph.from_edges(3, [(0, 1), (1, 2)])) == canonical_form(Graph.from_edges(3, [(1, 0), (0, 2)]))


def test_k3_differs_from_p3():
    assert canonical_form(complete_graph(3)) != canonical_form(path_graph(3))


def test_paw_all_labelings_one_form():
    paw = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    forms = {canonical_form(paw.relabel(p)) for p in permutations(range(4))}
    assert len(forms) == 1


@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_permutation(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g) == canonical_form(g.relabel(perm))


@given(graphs(max_n=6))
def test_canonical_form_separates_like_brute_force(g):
    h = Graph.from_edges(g.n, [(u, v) for u, v in g.edges][:-1]) if g.m else g
    same = canonical_form(g) == canonical_form(h)
    assert same == (brute_canonical(g) == brute_canonical(h))


def test_canonical_order_limit():
    with pytest.raises(ValueError):
        canonical_form(complete_graph(11))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_enumeration_matches_brute_dedup(n):
    assert len(list(enumerate_connected(n))) == brute_connected_classes(n)


def test_polya_oracle_counts():
    assert connected_counts(8) == [1, 1, 2, 6, 21, 112, 853, 11117]


def test_enumeration_n7_matches_polya():
    assert len(list(enumerate_connected(7))) == connected_counts(7)[-1]


def test_enumeration_distinct_and_ordered():
    gs = list(enumerate_connected(6))
    keys = [(g.m, canonical_form(g)) for g in gs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert all(is_connected(g) for g in gs)


def test_enumeration_deterministic():
    assert list(enumerate_graphs(5)) == list(enumerate_graphs(5))


@pytest.mark.parametrize("n", [0, 9])
def test_enumeration_range(n):
    with pytest.raises(ValueError):
        list(enumerate_connected(n))


def test_random_relabel_n8():
    rnd = random.Random(3)
    for g in list(enumerate_connected(5)):
        perm = list(range(5))
        rnd.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)
