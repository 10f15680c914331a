"""Small simple undirected graphs stored as adjacency bitmasks.

Vertices are ``0..n-1`` and row ``adj[v]`` is an int whose bit ``u`` is set
when ``uv`` is an edge.  Orders up to 64 are accepted; everything exact in
this package is only promised for much smaller graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Optional

MAX_ORDER = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in [1, {MAX_ORDER}], got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency has wrong number of rows")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside the graph")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as pairs ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return tuple(
            (u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def nonadjacent_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in combinations(range(self.n), 2) if not self.adj[u] >> v & 1]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def relabel(self, perm: "list[int] | tuple[int, ...]") -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def induced(self, mask: int) -> "Graph":
        """Induced subgraph on the vertices of ``mask``, relabelled in increasing order."""
        verts = list(bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        return Graph.from_edges(
            len(verts),
            ((index[u], index[v]) for u, v in self.edges if u in index and v in index),
        )

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def reach(g: Graph, start: int, allowed: Optional[int] = None) -> int:
    """Bitmask of vertices reachable from ``start`` inside ``allowed``."""
    if allowed is None:
        allowed = g.full_mask
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    return reach(g, 0) == g.full_mask


def is_connected_subset(g: Graph, mask: int) -> bool:
    if not mask:
        return False
    start = (mask & -mask).bit_length() - 1
    return reach(g, start, mask) == mask


def distances(g: Graph, source: int) -> list[Optional[int]]:
    dist: list[Optional[int]] = [None] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def diameter(g: Graph) -> float:
    """Largest eccentricity; ``math.inf`` for a disconnected graph."""
    best = 0
    for v in range(g.n):
        dist = distances(g, v)
        if any(d is None for d in dist):
            return float("inf")
        best = max(best, max(dist))
    return best


def has_cut_vertex(g: Graph) -> bool:
    if g.n < 3 or not is_connected(g):
        return False
    full = g.full_mask
    return any(not is_connected_subset(g, full & ~(1 << v)) for v in range(g.n))


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True when ``g`` has more than ``k`` vertices and no separating set smaller than ``k``."""
    if g.n <= k:
        return False
    full = g.full_mask
    for size in range(k):
        for removed in combinations(range(g.n), size):
            mask = full
            for v in removed:
                mask &= ~(1 << v)
            if not is_connected_subset(g, mask):
                return False
    return True


def is_k3_free(g: Graph) -> bool:
    return not any(g.adj[u] & g.adj[v] for u, v in g.edges)


@dataclass(frozen=True)
class GraphPredicateReport:
    connected: bool
    k3_free: bool
    diameter: float
    has_cut_vertex: bool
    max_degree: int
    # None when n <= 3: the degree threshold divides by n - 3
    degree_condition: Optional[bool]
    complement_4_connected: bool
    theorem2_applicable: bool

    def conditions(self) -> dict[str, bool]:
        """Theorem 2 conditions (a)-(e) keyed by letter."""
        return {
            "a": self.complement_4_connected,
            "b": self.k3_free,
            "c": bool(self.degree_condition),
            "d": self.diameter >= 3,
            "e": self.has_cut_vertex,
        }


def degree_condition(g: Graph) -> Optional[bool]:
    """``max_degree < n - (2m - 3(n-1)) / (n-3)`` evaluated in exact rationals."""
    n = g.n
    if n <= 3:
        return None
    delta = max(g.degree(v) for v in range(n))
    return Fraction(delta) < n - Fraction(2 * g.m - 3 * (n - 1), n - 3)


def predicates(g: Graph) -> GraphPredicateReport:
    connected = is_connected(g)
    k3 = is_k3_free(g)
    diam = diameter(g)
    cut = has_cut_vertex(g)
    deg = degree_condition(g)
    comp4 = vertex_connectivity_at_least(complement(g), 4)
    applicable = connected and g.n > 3 and (comp4 or k3 or bool(deg) or diam >= 3 or cut)
    return GraphPredicateReport(
        connected=connected,
        k3_free=k3,
        diameter=diam,
        has_cut_vertex=cut,
        max_degree=max(g.degree(v) for v in range(g.n)),
        degree_condition=deg,
        complement_4_connected=comp4,
        theorem2_applicable=applicable,
    )


# Named small graphs used across tests and the CLI.

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """Star on ``n`` vertices with center 0."""
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def complete_multipartite(parts: "list[int] | tuple[int, ...]") -> Graph:
    """Complete multipartite graph; part ``i`` occupies a consecutive block of labels."""
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    return Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]))
