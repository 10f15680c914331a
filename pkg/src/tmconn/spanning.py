"""Exact maximum-leaf spanning trees for small connected graphs.

For ``n >= 3`` the internal vertices of any spanning tree form a connected
dominating set, and any connected dominating set ``D`` yields a spanning tree
whose internal vertices lie in ``D``.  So ``q(G)`` is the minimum connected
dominating set size and ``l(G) = n - q(G)``; we find it by scanning vertex
subsets in order of size.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, bits, is_connected, is_connected_subset, popcount

MAX_LEAF_ORDER = 10


@dataclass(frozen=True)
class SpanningTreeResult:
    leaves: int
    internal: int
    tree: tuple[tuple[int, int], ...]


def closed_neighbourhood(g: Graph, mask: int) -> int:
    out = mask
    for v in bits(mask):
        out |= g.adj[v]
    return out


def is_connected_dominating(g: Graph, within: int, d: int) -> bool:
    """``d`` is connected and dominates every vertex of ``within`` (``d`` a subset of it)."""
    return (closed_neighbourhood(g, d) & within) == within and is_connected_subset(g, d)


def min_connected_dominating_set(g: Graph, within: int | None = None) -> int:
    """Smallest connected dominating set of ``G[within]`` (lowest mask among ties)."""
    if within is None:
        within = g.full_mask
    verts = list(bits(within))
    for size in range(1, len(verts) + 1):
        for combo in combinations(verts, size):
            d = 0
            for v in combo:
                d |= 1 << v
            if is_connected_dominating(g, within, d):
                return d
    raise ValueError("induced subgraph is disconnected")


def tree_with_internal(g: Graph, within: int, d: int) -> list[tuple[int, int]]:
    """Spanning tree of ``G[within]``: BFS tree on ``G[d]`` plus every other vertex hung on a neighbour in ``d``."""
    root = (d & -d).bit_length() - 1
    edges = []
    seen = 1 << root
    queue = [root]
    while queue:
        x = queue.pop(0)
        for y in bits(g.adj[x] & d & ~seen):
            seen |= 1 << y
            edges.append((min(x, y), max(x, y)))
            queue.append(y)
    for v in bits(within & ~d):
        u = (g.adj[v] & d & -(g.adj[v] & d)).bit_length() - 1
        edges.append((min(u, v), max(u, v)))
    return sorted(edges)


def max_leaf_spanning_tree(g: Graph) -> SpanningTreeResult:
    if g.n > MAX_LEAF_ORDER:
        raise ValueError(f"exact max-leaf search limited to n <= {MAX_LEAF_ORDER}, got {g.n}")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if g.n == 1:
        return SpanningTreeResult(0, 1, ())
    if g.n == 2:
        return SpanningTreeResult(2, 0, ((0, 1),))
    d = min_connected_dominating_set(g)
    tree = tuple(tree_with_internal(g, g.full_mask, d))
    q = popcount(d)
    return SpanningTreeResult(g.n - q, q, tree)


def leaf_number(g: Graph) -> int:
    return max_leaf_spanning_tree(g).leaves


def djs_bound_holds(g: Graph) -> bool:
    """Check: every ``t <= n-3`` with ``m >= n + C(t,2)`` has ``l(G) >= t + 1``."""
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    l = leaf_number(g)
    return all(l >= t + 1 for t in range(0, g.n - 2) if g.m >= g.n + comb(t, 2))
