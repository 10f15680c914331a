"""Exact total monochromatic connection number by branch and bound.

An extremal coloring is described by its nontrivial color trees.  Each tree
costs (wastes) ``|E(T)| - 1 + |internal(T)|`` colors, so

    tmc(G) = m + n - min total waste

over tree collections that are edge-disjoint, have disjoint internal vertex
sets, and put every nonadjacent pair inside some tree.

``simple`` mode restricts to collections whose trees pairwise share at most
one vertex; an extremal coloring of that shape always exists, and it lets a
tree be described by its vertex set ``S`` and internal set ``D`` alone, with
``D`` a minimal connected dominating set of ``G[S]``.  ``unrestricted`` mode
enumerates every subtree of ``G`` and serves as a slower cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .bounds import NotApplicable, complement_construction, lower_bound_theorem1
from .coloring import (
    ColorTree,
    TotalColoring,
    TreeCollection,
    all_distinct,
    coloring_from_collection,
    count_colors,
    is_tmc,
)
from .graph import Graph, bits, is_connected, popcount
from .spanning import closed_neighbourhood, tree_with_internal

SIMPLE_CAP = 8
UNRESTRICTED_CAP = 5


class SolverCapError(ValueError):
    pass


@dataclass
class TmcResult:
    value: int
    witness: TotalColoring
    waste: int
    node_count: int
    trees: Optional[TreeCollection] = None


def pair_capacity_bound(npairs: int, n: int) -> list[int]:
    """``lb[r]``: least ``sum(s_i - 1)`` over tree orders ``3 <= s_i <= n`` with ``sum C(s_i - 1, 2) >= r``.

    Any tree on ``s`` vertices wastes at least ``s - 1`` colors and joins at most
    ``C(s - 1, 2)`` nonadjacent pairs.
    """
    inf = float("inf")
    lb = [0] + [inf] * npairs
    for r in range(1, npairs + 1):
        for s in range(3, n + 1):
            prev = max(0, r - comb(s - 1, 2))
            lb[r] = min(lb[r], lb[prev] + s - 1)
    return lb  # type: ignore[return-value]


class _Search:
    def __init__(self, g: Graph):
        self.g = g
        n = g.n
        self.pairs = g.nonadjacent_pairs()
        npairs = len(self.pairs)
        self.all_pairs = (1 << npairs) - 1
        size = 1 << n

        conn = [False] * size
        for mask in range(1, size):
            low = (mask & -mask).bit_length() - 1
            seen = 1 << low
            frontier = seen
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= g.adj[v]
                nxt &= mask & ~seen
                seen |= nxt
                frontier = nxt
            conn[mask] = seen == mask
        closed = [closed_neighbourhood(g, mask) for mask in range(size)]

        pair_masks = [0] * size
        for i, (u, v) in enumerate(self.pairs):
            both = 1 << u | 1 << v
            for mask in range(size):
                if mask & both == both:
                    pair_masks[mask] |= 1 << i
        self.pair_masks = pair_masks

        # Candidate trees as (cost, S, D, pairs covered); D a minimal connected dominating set of G[S].
        cands = []
        for s in range(size):
            if popcount(s) < 3 or not conn[s] or not pair_masks[s]:
                continue
            found: list[int] = []
            subs = []
            d = s
            while d:
                subs.append(d)
                d = (d - 1) & s
            subs.sort(key=lambda x: (popcount(x), x))
            for d in subs:
                if any(f & d == f for f in found):
                    continue
                if conn[d] and closed[d] & s == s:
                    found.append(d)
                    cands.append((popcount(s) - 2 + popcount(d), s, d, pair_masks[s]))
        cands.sort()
        self.by_pair: list[list[tuple[int, int, int, int]]] = [[] for _ in range(npairs)]
        for c in cands:
            pm = c[3]
            for i in range(npairs):
                if pm >> i & 1:
                    self.by_pair[i].append(c)
        self.lb = pair_capacity_bound(npairs, n)
        self.nodes = 0
        self.best = float("inf")
        self.best_sets: Optional[list[tuple[int, int]]] = None

    def run(self, incumbent: float):
        self.best = incumbent
        self._dfs(0, 0, [], 0)

    def _dfs(self, covered: int, cost: int, chosen: list[tuple[int, int]], internal: int):
        self.nodes += 1
        left = self.all_pairs & ~covered
        if not left:
            if cost < self.best:
                self.best = cost
                self.best_sets = list(chosen)
            return
        if cost + self.lb[popcount(left)] >= self.best:
            return
        first = (left & -left).bit_length() - 1
        for c, s, d, pm in self.by_pair[first]:
            if cost + c >= self.best:
                break
            if d & internal:
                continue
            if any(popcount(s & t) > 1 for t, _ in chosen):
                continue
            rest = left & ~pm
            if cost + c + self.lb[popcount(rest)] >= self.best:
                continue
            chosen.append((s, d))
            self._dfs(covered | pm, cost + c, chosen, internal | d)
            chosen.pop()


def _collection_from_sets(g: Graph, sets: list[tuple[int, int]]) -> TreeCollection:
    return TreeCollection(
        [ColorTree.from_edges(k, tree_with_internal(g, s, d)) for k, (s, d) in enumerate(sets)]
    )


def _seeds(g: Graph) -> list[TotalColoring]:
    seeds = [lower_bound_theorem1(g)]
    try:
        _, tree, _ = complement_construction(g)
        seeds.append(coloring_from_collection(g, TreeCollection([tree])))
    except NotApplicable:
        pass
    return seeds


def _check_capacity(g: Graph, trees: TreeCollection) -> None:
    npairs = len(g.nonadjacent_pairs())
    if trees.pair_capacity() < npairs:
        raise AssertionError("tree collection covers more pairs than its capacity allows")


def _finish(g: Graph, witness: TotalColoring, nodes: int, trees: Optional[TreeCollection]) -> TmcResult:
    verdict = is_tmc(g, witness)
    if not verdict:
        raise AssertionError(f"solver witness fails at pair {verdict.failing_pair}")
    value = count_colors(witness)
    return TmcResult(value=value, witness=witness, waste=g.m + g.n - value, node_count=nodes, trees=trees)


def tmc_simple(g: Graph) -> TmcResult:
    if g.n > SIMPLE_CAP:
        raise SolverCapError(f"simple mode is exact only for n <= {SIMPLE_CAP}, got {g.n}")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if g.is_complete():
        return _finish(g, all_distinct(g), 0, TreeCollection([]))
    seeds = _seeds(g)
    best_seed = max(seeds, key=count_colors)
    search = _Search(g)
    search.run(g.m + g.n - count_colors(best_seed))
    if search.best_sets is None:
        # No strictly better collection: the seed is optimal.
        return _finish(g, best_seed, search.nodes, None)
    trees = _collection_from_sets(g, search.best_sets)
    trees.validate(g, simple=True)
    _check_capacity(g, trees)
    if trees.waste != search.best:
        raise AssertionError("tree waste differs from the search cost")
    return _finish(g, coloring_from_collection(g, trees, simple=True), search.nodes, trees)


def _subtrees(g: Graph) -> list[tuple[int, int, int, int]]:
    """Every subtree with >= 2 edges as (waste, edge mask, vertex mask, internal mask)."""
    edges = g.edges
    out = []
    for emask in range(1, 1 << len(edges)):
        k = popcount(emask)
        if k < 2 or k > g.n - 1:
            continue
        deg = [0] * g.n
        vmask = 0
        for i in bits(emask):
            u, v = edges[i]
            deg[u] += 1
            deg[v] += 1
            vmask |= 1 << u | 1 << v
        if popcount(vmask) != k + 1:
            continue
        # k edges on k + 1 vertices form a tree iff connected
        adj = [0] * g.n
        for i in bits(emask):
            u, v = edges[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        start = (vmask & -vmask).bit_length() - 1
        seen = 1 << start
        stack = [start]
        while stack:
            x = stack.pop()
            for y in bits(adj[x] & ~seen):
                seen |= 1 << y
                stack.append(y)
        if seen != vmask:
            continue
        internal = sum(1 << v for v in range(g.n) if deg[v] >= 2)
        out.append((k - 1 + popcount(internal), emask, vmask, internal))
    return out


def tmc_unrestricted(g: Graph) -> TmcResult:
    """Exhaustive search over all edge-disjoint, internal-disjoint subtree collections."""
    if g.n > UNRESTRICTED_CAP:
        raise SolverCapError(f"unrestricted mode is exact only for n <= {UNRESTRICTED_CAP}, got {g.n}")
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    pairs = g.nonadjacent_pairs()
    trees = sorted(_subtrees(g))
    best = [float("inf"), None]
    nodes = 0

    def dfs(todo: list[tuple[int, int]], cost: int, used_e: int, used_i: int, chosen: list):
        nonlocal nodes
        nodes += 1
        if cost >= best[0]:
            return
        if not todo:
            best[0] = cost
            best[1] = list(chosen)
            return
        u, v = todo[0]
        both = 1 << u | 1 << v
        for w, em, vm, im in trees:
            if vm & both != both or em & used_e or im & used_i:
                continue
            if cost + w >= best[0]:
                break
            chosen.append(em)
            rest = [(a, b) for a, b in todo if not (vm >> a & 1 and vm >> b & 1)]
            dfs(rest, cost + w, used_e | em, used_i | im, chosen)
            chosen.pop()

    dfs(pairs, 0, 0, 0, [])
    edges = g.edges
    collection = TreeCollection(
        [ColorTree.from_edges(k, [edges[i] for i in bits(em)]) for k, em in enumerate(best[1])]
    )
    return _finish(g, coloring_from_collection(g, collection), nodes, collection)


def tmc_exact(g: Graph, mode: str = "simple") -> TmcResult:
    if mode == "simple":
        return tmc_simple(g)
    if mode == "unrestricted":
        return tmc_unrestricted(g)
    raise ValueError(f"unknown mode {mode!r}")
