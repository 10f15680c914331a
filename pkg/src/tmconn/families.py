"""Generators for the extremal graph families, each with its predicted tmc.

Labeling conventions (fixed so canonical-form cross-checks are reproducible):

* GTS: clique vertices ``0..t`` with ``u = 0`` and ``v = 1``; the path that
  replaces ``uv`` runs ``0, t+1, t+2, ..., n-1, 1``.  Deleted edges go from
  ``u`` to ``2, 3, ...`` in order.
* GNT: parts of size 2 are ``{0,1}, {2,3}, ...``; the part of size ``t`` is
  last.  The first vertex of each part loses its edges inside the part.
* GSTAR: singleton parts ``0..n-t-1``, the big part ``n-t..n-1`` last; extra
  edges inside the big part in lexicographic order.
* MULTIPARTITE: parts in the given order, consecutive labels.
* STAR: center 0.  PATH: ``0-1-...-(n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .graph import (
    Graph,
    complete_graph,
    complete_multipartite,
    is_connected,
    path_graph,
    star_graph,
)


class FamilyParameterError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    predicted_tmc: int
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not is_connected(self.graph):
            raise AssertionError(f"{self.family} instance {self.params} is disconnected")


def gen_gts(n: int, t: int, s: int) -> FamilyInstance:
    """Clique ``K_{t+1}`` with edge ``uv`` replaced by a path of ``n-t`` edges, minus ``s`` edges at ``u``."""
    if not (2 <= t <= n - 2 and 0 <= s <= t - 1):
        raise FamilyParameterError(f"GTS needs 2 <= t <= n-2 and 0 <= s <= t-1, got n={n}, t={t}, s={s}")
    edges = set(combinations(range(t + 1), 2))
    edges.discard((0, 1))
    path = [0, *range(t + 1, n), 1]
    edges.update((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    for w in range(2, 2 + s):
        edges.discard((0, w))
    g = Graph.from_edges(n, edges)
    if g.m != n + comb(t, 2) - 1 - s:
        raise AssertionError("GTS edge count mismatch")
    return FamilyInstance(g, g.m - n + 2 + t, "GTS", {"n": n, "t": t, "s": s})


def _gnt(n: int, p: int) -> FamilyInstance:
    t = 2 * (p + 1) - n
    sizes = [2] * (n - p - 1) + [t]
    edges = set(combinations(range(n), 2))
    start = 0
    for size in sizes:
        for w in range(start + 1, start + size):
            edges.discard((start, w))
        start += size
    g = Graph.from_edges(n, edges)
    if g.m != comb(n, 2) - p:
        raise AssertionError("GNT edge count mismatch")
    return FamilyInstance(g, g.m, "GNT", {"n": n, "p": p, "t": t})


def gnt_parameters(n: int) -> list[int]:
    """Valid ``p`` with ``n/2 < p < n-2``."""
    return [p for p in range(n) if 2 * p > n and p < n - 2]


def gen_gnt(n: int, p: int) -> FamilyInstance:
    if not gnt_parameters(n):
        raise FamilyParameterError(f"no p satisfies n/2 < p < n-2 for n={n}")
    if not (2 * p > n and p < n - 2):
        raise FamilyParameterError(f"GNT needs n/2 < p < n-2, got n={n}, p={p}")
    return _gnt(n, p)


def gen_gnt3(n: int) -> FamilyInstance:
    """The ``t = 3`` member used as the odd-order boundary witness (``p = floor(n/2) + 1``)."""
    if n % 2 == 0 or n < 5:
        raise FamilyParameterError(f"GNT3 needs odd n >= 5, got {n}")
    inst = _gnt(n, n // 2 + 1)
    return FamilyInstance(inst.graph, inst.predicted_tmc, "GNT", {"n": n, "p": n // 2 + 1, "t": 3})


def gen_gstar(n: int, t: int, extra: int) -> FamilyInstance:
    """``K_{1,...,1,t}`` plus ``extra <= t-2`` edges inside the part of size ``t``."""
    if not (2 <= t <= n - 1 and 0 <= extra <= t - 2):
        raise FamilyParameterError(f"GSTAR needs 2 <= t <= n-1 and 0 <= extra <= t-2, got n={n}, t={t}, extra={extra}")
    base = complete_multipartite([1] * (n - t) + [t])
    inside = list(combinations(range(n - t, n), 2))[:extra]
    g = Graph.from_edges(n, list(base.edges) + inside)
    if g.m != comb(n - t, 2) + t * (n - t) + extra:
        raise AssertionError("GSTAR edge count mismatch")
    return FamilyInstance(g, g.m + n - t, "GSTAR", {"n": n, "t": t, "extra": extra})


def gen_multipartite(parts) -> FamilyInstance:
    parts = list(parts)
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise FamilyParameterError(f"need at least two nonempty parts, got {parts}")
    g = complete_multipartite(parts)
    big = sum(1 for p in parts if p >= 2)
    return FamilyInstance(g, g.m + len(parts) - big, "MULTIPARTITE", {"parts": parts})


def gen_complete(n: int) -> FamilyInstance:
    if n < 1:
        raise FamilyParameterError("n must be positive")
    g = complete_graph(n)
    return FamilyInstance(g, g.m + n, "COMPLETE", {"n": n})


def gen_star(n: int) -> FamilyInstance:
    if n < 3:
        raise FamilyParameterError("a star with a distinct center needs n >= 3")
    return FamilyInstance(star_graph(n), n, "STAR", {"n": n})


def gen_path(n: int) -> FamilyInstance:
    if n < 2:
        raise FamilyParameterError("path needs n >= 2")
    return FamilyInstance(path_graph(n), 3, "PATH", {"n": n})


def all_gts(max_n: int):
    for n in range(4, max_n + 1):
        for t in range(2, n - 1):
            for s in range(t):
                yield gen_gts(n, t, s)


def all_gnt(max_n: int):
    for n in range(5, max_n + 1):
        for p in gnt_parameters(n):
            yield gen_gnt(n, p)
        if n % 2:
            yield gen_gnt3(n)


def all_gstar(max_n: int):
    for n in range(3, max_n + 1):
        for t in range(2, n):
            for extra in range(t - 1):
                yield gen_gstar(n, t, extra)


def partitions(n: int, largest: int | None = None):
    """Integer partitions of ``n`` as non-increasing lists."""
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield [first, *rest]


def all_multipartite(max_n: int):
    for n in range(2, max_n + 1):
        for parts in partitions(n):
            if len(parts) >= 2:
                yield gen_multipartite(parts)
