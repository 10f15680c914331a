"""Total colorings, color trees, and the TMC check.

A total coloring assigns a color id to every edge and every vertex.  It is a
TMC-coloring when every pair of vertices is joined by a path whose edges and
interior vertices all carry one color.  ``is_tmc`` decides this directly from
that definition, so it can judge arbitrary colorings, not just ones built from
color trees.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import NamedTuple, Optional

from .graph import Graph, bits, is_connected


class ColoringError(ValueError):
    pass


class InfeasibleCollection(ValueError):
    """A tree collection violates one of the feasibility constraints."""

    def __init__(self, constraint: str, detail: str = ""):
        self.constraint = constraint
        super().__init__(f"{constraint}: {detail}" if detail else constraint)


@dataclass
class TotalColoring:
    edge_colors: dict[tuple[int, int], int]
    vertex_colors: list[int]

    def color_of(self, u: int, v: int) -> int:
        return self.edge_colors[(u, v) if u < v else (v, u)]

    def colors(self) -> set[int]:
        return set(self.edge_colors.values()) | set(self.vertex_colors)

    def check_domain(self, g: Graph) -> None:
        if len(self.vertex_colors) != g.n:
            raise ColoringError(f"coloring has {len(self.vertex_colors)} vertex colors, graph has {g.n} vertices")
        if set(self.edge_colors) != set(g.edges):
            raise ColoringError("edge colors do not match the graph's edge set")

    def to_json(self, g: Graph) -> str:
        doc = {
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "edge_colors": [self.edge_colors[e] for e in g.edges],
            "vertex_colors": list(self.vertex_colors),
        }
        return json.dumps(doc, sort_keys=False)

    @classmethod
    def from_json(cls, text: str, g: Optional[Graph] = None) -> tuple[Graph, "TotalColoring"]:
        """Parse the coloring document; returns the graph it describes and the coloring.

        When ``g`` is given the document must describe exactly that graph.
        """
        try:
            doc = json.loads(text)
            n = doc["n"]
            edges = [tuple(e) for e in doc["edges"]]
            ecol = doc["edge_colors"]
            vcol = doc["vertex_colors"]
        except (ValueError, KeyError, TypeError) as exc:
            raise ColoringError(f"malformed coloring document: {exc}") from exc
        ints = [n, *vcol, *ecol] + [x for e in edges for x in e]
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in ints):
            raise ColoringError("coloring document must contain integers only")
        if any(len(e) != 2 or e[0] >= e[1] for e in edges):
            raise ColoringError("edges must be pairs [u, v] with u < v")
        if len(ecol) != len(edges):
            raise ColoringError("edge_colors not aligned with edges")
        if len(vcol) != n:
            raise ColoringError("vertex_colors length differs from n")
        host = Graph.from_edges(n, edges)
        if g is not None and host != g:
            raise ColoringError("coloring document describes a different graph")
        col = cls(dict(zip(edges, ecol)), list(vcol))
        col.check_domain(host)
        return host, col


@dataclass(frozen=True)
class ColorTree:
    color: int
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]
    internal: frozenset[int] = field(default=frozenset())

    @classmethod
    def from_edges(cls, color: int, edges) -> "ColorTree":
        es = frozenset((min(u, v), max(u, v)) for u, v in edges)
        deg: dict[int, int] = defaultdict(int)
        for u, v in es:
            deg[u] += 1
            deg[v] += 1
        return cls(color, frozenset(deg), es, frozenset(v for v, d in deg.items() if d >= 2))

    @property
    def nontrivial(self) -> bool:
        return len(self.edges) >= 2

    @property
    def waste(self) -> int:
        if not self.nontrivial:
            return 0
        return len(self.edges) - 1 + len(self.internal)

    def is_tree(self) -> bool:
        if len(self.edges) != len(self.vertices) - 1:
            return False
        seen = {min(self.vertices)}
        frontier = list(seen)
        while frontier:
            x = frontier.pop()
            for u, v in self.edges:
                for a, b in ((u, v), (v, u)):
                    if a == x and b not in seen:
                        seen.add(b)
                        frontier.append(b)
        return seen == self.vertices


@dataclass
class TreeCollection:
    trees: list[ColorTree]

    @property
    def waste(self) -> int:
        return sum(t.waste for t in self.trees)

    def pair_capacity(self) -> int:
        """Sum of C(|V(T)| - 1, 2), an upper bound on nonadjacent pairs covered."""
        return sum((len(t.vertices) - 1) * (len(t.vertices) - 2) // 2 for t in self.trees)

    def is_simple(self) -> bool:
        return all(len(a.vertices & b.vertices) <= 1 for a, b in combinations(self.trees, 2))

    def validate(self, g: Graph, simple: bool = False) -> None:
        for t in self.trees:
            if len(t.edges) < 2:
                raise InfeasibleCollection("nontrivial", f"tree of color {t.color} has fewer than 2 edges")
            for u, v in t.edges:
                if not g.has_edge(u, v):
                    raise InfeasibleCollection("subgraph", f"edge {u}-{v} not in graph")
            if not t.is_tree():
                raise InfeasibleCollection("tree", f"color {t.color} edges do not form a tree on its vertices")
            if t != ColorTree.from_edges(t.color, t.edges):
                raise InfeasibleCollection("tree", f"color {t.color} vertex or internal sets inconsistent")
        for a, b in combinations(self.trees, 2):
            if a.edges & b.edges:
                raise InfeasibleCollection("edge-disjoint", f"colors {a.color} and {b.color} share an edge")
            if a.internal & b.internal:
                raise InfeasibleCollection("internal-disjoint", f"colors {a.color} and {b.color} share an internal vertex")
            if simple and len(a.vertices & b.vertices) > 1:
                raise InfeasibleCollection("simple", f"colors {a.color} and {b.color} share more than one vertex")
        for u, v in g.nonadjacent_pairs():
            if not any(u in t.vertices and v in t.vertices for t in self.trees):
                raise InfeasibleCollection("coverage", f"nonadjacent pair {u},{v} lies in no tree")


class Verdict(NamedTuple):
    ok: bool
    failing_pair: Optional[tuple[int, int]] = None

    def __bool__(self):
        return self.ok


def color_subgraphs(g: Graph, col: TotalColoring) -> dict[int, tuple[list[tuple[int, int]], list[int]]]:
    """Map each color to (edges of that color, vertices of that color)."""
    col.check_domain(g)
    out: dict[int, tuple[list, list]] = {}
    for e in g.edges:
        out.setdefault(col.edge_colors[e], ([], []))[0].append(e)
    for v, c in enumerate(col.vertex_colors):
        out.setdefault(c, ([], []))[1].append(v)
    return out


def is_tmc(g: Graph, col: TotalColoring) -> Verdict:
    if not is_connected(g):
        raise ColoringError("TMC-colorings are defined for connected graphs only")
    col.check_domain(g)
    cadj: dict[int, list[int]] = {}
    for (u, v), c in col.edge_colors.items():
        rows = cadj.setdefault(c, [0] * g.n)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    passable: dict[int, int] = defaultdict(int)
    for v, c in enumerate(col.vertex_colors):
        passable[c] |= 1 << v

    # ends[u]: vertices joined to u by some total monochromatic path
    ends = [0] * g.n
    for c, rows in cadj.items():
        through = passable[c]
        for u in range(g.n):
            if not rows[u]:
                continue
            hit = rows[u]
            seen = 1 << u
            frontier = hit & through & ~seen
            while frontier:
                seen |= frontier
                step = 0
                for w in bits(frontier):
                    step |= rows[w]
                hit |= step
                frontier = step & through & ~seen
            ends[u] |= hit
    for u, v in combinations(range(g.n), 2):
        if not ends[u] >> v & 1:
            return Verdict(False, (u, v))
    return Verdict(True)


def count_colors(col: TotalColoring) -> int:
    return len(col.colors())


def waste(g: Graph, col: TotalColoring) -> int:
    return g.m + g.n - count_colors(col)


def all_distinct(g: Graph) -> TotalColoring:
    edge_colors = {e: i for i, e in enumerate(g.edges)}
    return TotalColoring(edge_colors, [g.m + v for v in range(g.n)])


def coloring_from_collection(g: Graph, trees: TreeCollection, simple: bool = False) -> TotalColoring:
    """Color each tree's edges and internal vertices with its own color, everything else fresh."""
    trees.validate(g, simple=simple)
    edge_colors: dict[tuple[int, int], int] = {}
    vertex_colors: list[Optional[int]] = [None] * g.n
    fresh = 0
    for t in trees.trees:
        for e in t.edges:
            edge_colors[e] = fresh
        for v in t.internal:
            vertex_colors[v] = fresh
        fresh += 1
    for e in g.edges:
        if e not in edge_colors:
            edge_colors[e] = fresh
            fresh += 1
    for v in range(g.n):
        if vertex_colors[v] is None:
            vertex_colors[v] = fresh
            fresh += 1
    return TotalColoring(edge_colors, vertex_colors)  # type: ignore[arg-type]
