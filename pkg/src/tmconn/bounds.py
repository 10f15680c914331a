"""Constructive TMC-colorings that certify lower bounds on tmc."""

from __future__ import annotations

from math import comb

from .coloring import ColorTree, TotalColoring, TreeCollection, coloring_from_collection, is_tmc
from .graph import Graph, bits, complement, complete_multipartite, is_connected, reach
from .spanning import max_leaf_spanning_tree


class NotApplicable(ValueError):
    pass


def lower_bound_theorem1(g: Graph) -> TotalColoring:
    """One color on a max-leaf spanning tree and its internal vertices; ``m - n + 2 + l`` colors."""
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    st = max_leaf_spanning_tree(g)
    trees = [ColorTree.from_edges(0, st.tree)] if len(st.tree) >= 2 else []
    return coloring_from_collection(g, TreeCollection(trees))


def complement_construction(g: Graph) -> tuple[str, ColorTree, int]:
    """Star or double-star tree for a graph missing ``p`` edges, ``1 <= p <= n-3``.

    Returns ``(branch, tree, size of the non-isolated part of the complement)``.
    """
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    n = g.n
    p = comb(n, 2) - g.m
    if not 1 <= p <= n - 3:
        raise NotApplicable(f"missing-edge count p={p} outside [1, {n - 3}]")
    gbar = complement(g)
    core = 0
    for v in range(n):
        if gbar.adj[v]:
            core |= 1 << v
    size = bin(core).count("1")
    if size <= p + 1:
        centre = next((v for v in range(n) if not core >> v & 1), None)
        if centre is None or g.degree(centre) != n - 1:
            raise AssertionError("no full-degree vertex outside the complement core")
        tree = ColorTree.from_edges(0, [(centre, x) for x in bits(core)])
        return "star", tree, size
    comps = []
    left = core
    while left:
        start = (left & -left).bit_length() - 1
        comp = reach(gbar, start, core)
        comps.append(comp)
        left &= ~comp
    if len(comps) < 2:
        raise AssertionError("complement core is connected; double star impossible")
    comp_v = comps[0]
    v = (comp_v & -comp_v).bit_length() - 1
    u = (comps[1] & -comps[1]).bit_length() - 1
    edges = [(u, x) for x in bits(comp_v)]
    edges += [(v, y) for y in bits(core & ~comp_v) if y != u]
    return "double-star", ColorTree.from_edges(0, edges), size


def lower_bound_complement(g: Graph) -> TotalColoring:
    """Coloring with ``m + n - |V(G~)|`` colors, where ``G~`` is the complement minus isolated vertices."""
    _, tree, _ = complement_construction(g)
    col = coloring_from_collection(g, TreeCollection([tree]))
    verdict = is_tmc(g, col)
    if not verdict:
        raise AssertionError(f"complement construction failed at pair {verdict.failing_pair}")
    return col


def complement_bound_value(n: int, p: int) -> int:
    """Guaranteed tmc for ``m = C(n,2) - p`` edges."""
    if 0 <= p <= n / 2:
        return comb(n, 2) + n - 3 * p
    return comb(n, 2) - p


def multipartite_trees(parts) -> list[ColorTree]:
    """Color trees covering every part of ``K_{parts}`` with total waste ``sum of sizes of parts >= 2``.

    Each part of size >= 2 gets a star centred in the next big part (cyclically),
    or in a singleton part when there are exactly two big parts.  With two big
    parts and no singletons no valid star pair exists (the two stars would share
    the edge between their centres), so a double star spans both parts instead.
    """
    parts = list(parts)
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise ValueError("need at least two nonempty parts")
    blocks = []
    start = 0
    for size in parts:
        blocks.append(list(range(start, start + size)))
        start += size
    big = [i for i, size in enumerate(parts) if size >= 2]
    singles = [i for i, size in enumerate(parts) if size == 1]
    if not big:
        return []
    if len(big) == 2 and not singles:
        a, b = blocks[big[0]], blocks[big[1]]
        x, y = a[0], b[0]
        edges = [(x, w) for w in b] + [(y, w) for w in a if w != x]
        return [ColorTree.from_edges(0, edges)]
    if len(big) == 1:
        centres = {big[0]: blocks[0 if big[0] != 0 else 1][0]}
    elif len(big) == 2:
        centres = {big[0]: blocks[singles[0]][0], big[1]: blocks[big[0]][0]}
    else:
        centres = {j: blocks[big[(k + 1) % len(big)]][0] for k, j in enumerate(big)}
    return [
        ColorTree.from_edges(k, [(centres[j], w) for w in blocks[j]])
        for k, j in enumerate(big)
    ]


def multipartite_coloring(parts) -> TotalColoring:
    """TMC-coloring of ``K_{parts}`` using ``m + r - t`` colors (``t`` = parts of size >= 2)."""
    g = complete_multipartite(parts)
    col = coloring_from_collection(g, TreeCollection(multipartite_trees(parts)))
    verdict = is_tmc(g, col)
    if not verdict:
        raise AssertionError(f"multipartite construction failed at pair {verdict.failing_pair}")
    return col


def lower_bound_subgraph(g: Graph, h: Graph, tmc_h: int) -> int:
    """``m(G) - m(H) + tmc(H)`` for a connected spanning subgraph ``H`` of ``G``."""
    if h.n != g.n or not is_connected(h):
        raise ValueError("h must be a connected spanning subgraph")
    if any(not g.has_edge(u, v) for u, v in h.edges):
        raise ValueError("h has an edge missing from g")
    return g.m - h.m + tmc_h
