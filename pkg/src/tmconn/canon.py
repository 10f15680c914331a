"""Canonical forms and isomorph-free enumeration of small graphs.

The canonical form is the graph6 string (as bytes) of the relabelling whose
upper-triangle bit string, in graph6 column order, is lexicographically
smallest.  The minimum is taken over the vertex orderings that respect a
colour-refinement partition; because that partition is itself an isomorphism
invariant, the result is identical for isomorphic inputs.
"""

from __future__ import annotations

from typing import Iterator

from . import graph6
from .graph import Graph, bits, is_connected

MAX_CANON_ORDER = 10
MAX_ENUM_ORDER = 8


def refine(g: Graph) -> list[int]:
    """Stable colour refinement with colours numbered by sorted signature."""
    colour = [g.degree(v) for v in range(g.n)]
    ncol = len(set(colour))
    while True:
        sigs = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        rank = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        colour = [rank[s] for s in sigs]
        if len(rank) == ncol:
            return colour
        ncol = len(rank)


def canonical_labeling(g: Graph) -> list[int]:
    """Return ``order`` such that ``order[p]`` is the vertex placed at position ``p``."""
    if g.n > MAX_CANON_ORDER:
        raise ValueError(f"canonical form limited to n <= {MAX_CANON_ORDER}, got {g.n}")
    colour = refine(g)
    slots = sorted(colour)
    adj = g.adj
    # Partial orderings tied for the smallest prefix so far.
    survivors: list[tuple[int, ...]] = [()]
    for pos in range(g.n):
        want = slots[pos]
        best = None
        nxt: list[tuple[int, ...]] = []
        for prefix in survivors:
            used = 0
            for v in prefix:
                used |= 1 << v
            for v in range(g.n):
                if colour[v] != want or used >> v & 1:
                    continue
                row = adj[v]
                col = 0
                for u in prefix:
                    col = col << 1 | (row >> u & 1)
                if best is None or col < best:
                    best = col
                    nxt = [prefix + (v,)]
                elif col == best:
                    nxt.append(prefix + (v,))
        survivors = nxt
    return list(survivors[0])


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph) -> bytes:
    return graph6.encode(canonical_graph(g)).encode("ascii")


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative of every graph of order ``n``, connected or not.

    Built edge by edge: each class with ``m + 1`` edges arises from some class
    with ``m`` edges by adding one edge.
    """
    if not 1 <= n <= MAX_ENUM_ORDER:
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_ORDER}, got {n}")
    level = {canonical_form(Graph(n, (0,) * n)): Graph(n, (0,) * n)}
    out = []
    while level:
        out.extend(graph6.decode(k.decode()) for k in sorted(level))
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for u, v in g.nonadjacent_pairs():
                rows = list(g.adj)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                h = Graph(n, tuple(rows))
                key = canonical_form(h)
                if key not in nxt:
                    nxt[key] = h
        level = nxt
    return out


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Connected graphs of order ``n`` up to isomorphism, ordered by (m, canonical form)."""
    for g in enumerate_graphs(n):
        if is_connected(g):
            yield g
