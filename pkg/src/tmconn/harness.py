"""Exhaustive reproduction of the tmc theorems on all small connected graphs.

A census holds one record per isomorphism class of connected graphs of a given
order: size, leaf number, exact tmc with a witness coloring, and the
Theorem 2 predicate report.  Empirical f and g are read off the census and
compared with the closed forms; the family lemmas are checked by running the
exact solver on every generated instance.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from pathlib import Path
from typing import Callable, Iterable, Optional

from . import families, graph6
from .bounds import complement_bound_value, complement_construction, lower_bound_complement
from .canon import enumerate_connected
from .coloring import TotalColoring, count_colors, is_tmc
from .exact import tmc_exact
from .formulas import f_eval, g_eval
from .graph import Graph, bits, predicates, star_graph
from .spanning import djs_bound_holds, leaf_number

log = logging.getLogger(__name__)

SOLVER_VERSION = 1
CACHE_MAGIC = "# tmconn-census"
CENSUS_CAP = 7
LONG_CAP = 8
THEOREMS = ("T2", "T3", "T4", "L_GTS", "L_GNT", "L_MULTI", "L_GSTAR", "L_LOWER")


@dataclass
class CensusRecord:
    graph6: str
    m: int
    leaves: int
    tmc: int
    predicates: dict
    edge_colors: list[int]
    vertex_colors: list[int]

    @property
    def graph(self) -> Graph:
        return graph6.decode(self.graph6)

    def witness_json(self) -> dict:
        g = self.graph
        return {
            "n": g.n,
            "edges": [list(e) for e in g.edges],
            "edge_colors": self.edge_colors,
            "vertex_colors": self.vertex_colors,
        }


@dataclass
class TmcCensus:
    n: int
    records: list[CensusRecord]

    def by_m(self) -> dict[int, dict]:
        """Per-size aggregates: min and max tmc and the first record attaining the min."""
        out: dict[int, dict] = {}
        for rec in self.records:
            agg = out.setdefault(rec.m, {"min_tmc": rec.tmc, "max_tmc": rec.tmc, "argmin": rec.graph6, "count": 0})
            agg["count"] += 1
            if rec.tmc < agg["min_tmc"]:
                agg["min_tmc"] = rec.tmc
                agg["argmin"] = rec.graph6
            agg["max_tmc"] = max(agg["max_tmc"], rec.tmc)
        return dict(sorted(out.items()))


def census_record(g: Graph) -> CensusRecord:
    res = tmc_exact(g)
    rep = predicates(g)
    preds = asdict(rep)
    if preds["diameter"] == float("inf"):
        preds["diameter"] = None
    return CensusRecord(
        graph6=graph6.encode(g),
        m=g.m,
        leaves=leaf_number(g),
        tmc=res.value,
        predicates=preds,
        edge_colors=[res.witness.edge_colors[e] for e in g.edges],
        vertex_colors=list(res.witness.vertex_colors),
    )


def _record_from_g6(text: str) -> CensusRecord:
    return census_record(graph6.decode(text))


def _cache_path(cache_dir: Path, n: int) -> Path:
    return cache_dir / f"census-n{n}-v{SOLVER_VERSION}.jsonl"


def save_census(census: TmcCensus, path: Path) -> None:
    """Write the census: one header line, then one JSON record per line."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w") as fh:
        fh.write(f"{CACHE_MAGIC} v{SOLVER_VERSION} n={census.n}\n")
        for rec in census.records:
            fh.write(json.dumps(asdict(rec), sort_keys=True) + "\n")
    os.replace(tmp, path)


def load_census(path: Path, n: int) -> Optional[TmcCensus]:
    try:
        with open(path) as fh:
            header = fh.readline().rstrip("\n")
            if header != f"{CACHE_MAGIC} v{SOLVER_VERSION} n={n}":
                log.warning("ignoring cache %s with header %r", path, header)
                return None
            records = [CensusRecord(**json.loads(line)) for line in fh if line.strip()]
    except FileNotFoundError:
        return None
    except (ValueError, TypeError) as exc:
        log.warning("ignoring unreadable cache %s: %s", path, exc)
        return None
    return TmcCensus(n, records)


def build_census(
    n: int,
    allow_long: bool = False,
    jobs: int = 1,
    cache_dir: Optional[Path] = None,
    progress: Optional[Callable[[int, int], None]] = None,
) -> TmcCensus:
    if n < 3:
        raise ValueError(f"census needs n >= 3, got {n}")
    cap = LONG_CAP if allow_long else CENSUS_CAP
    if n > cap:
        raise ValueError(f"census of order {n} needs the long-running flag" if n <= LONG_CAP else f"census capped at n={LONG_CAP}")
    if cache_dir is not None:
        cached = load_census(_cache_path(cache_dir, n), n)
        if cached is not None:
            return cached
    items = [graph6.encode(g) for g in enumerate_connected(n)]
    records: list[CensusRecord] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, rec in enumerate(pool.map(_record_from_g6, items, chunksize=16)):
                records.append(rec)
                if progress:
                    progress(i + 1, len(items))
    else:
        for i, text in enumerate(items):
            records.append(_record_from_g6(text))
            if progress:
                progress(i + 1, len(items))
    census = TmcCensus(n, records)
    if cache_dir is not None:
        save_census(census, _cache_path(cache_dir, n))
    return census


def empirical_f(census: TmcCensus, k: int) -> int:
    """One more than the largest size of a graph with ``tmc < k`` (``n - 1`` if none)."""
    bad = [rec.m for rec in census.records if rec.tmc < k]
    return max(bad) + 1 if bad else census.n - 1


def empirical_g(census: TmcCensus, k: int) -> Optional[int]:
    """One less than the smallest size of a graph with ``tmc > k``; ``None`` when even trees exceed ``k``."""
    over = [rec.m for rec in census.records if rec.tmc > k]
    if not over:
        return comb(census.n, 2)
    value = min(over) - 1
    return value if value >= census.n - 1 else None


@dataclass
class TheoremReport:
    theorem: str
    n: int
    rows: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row["match"] for row in self.rows)

    @property
    def counterexamples(self) -> list[dict]:
        return [row for row in self.rows if not row["match"]]

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "n": self.n, "passed": self.passed, "notes": self.notes, "rows": self.rows}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def csv_lines(self) -> list[str]:
        keys = sorted({key for row in self.rows for key in row if key != "counterexample"})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["theorem", "n", *keys])
        for row in self.rows:
            writer.writerow([self.theorem, self.n] + ["" if row.get(k) is None else row[k] for k in keys])
        return buf.getvalue().splitlines()


def _counterexample(rec: CensusRecord) -> dict:
    return {"graph6": rec.graph6, "tmc": rec.tmc, "witness": rec.witness_json()}


def _theorem3(census: TmcCensus) -> TheoremReport:
    n = census.n
    rep = TheoremReport("T3", n)
    for k in range(3, comb(n, 2) + n + 1):
        formula = f_eval(n, k)
        emp = empirical_f(census, k)
        row = {"k": k, "formula": formula.value, "empirical": emp, "case": formula.case, "match": emp == formula.value}
        if not row["match"]:
            bad = [rec for rec in census.records if rec.tmc < k]
            if bad:
                row["counterexample"] = _counterexample(max(bad, key=lambda rec: rec.m))
        rep.rows.append(row)
    return rep


def _theorem4(census: TmcCensus) -> TheoremReport:
    n = census.n
    rep = TheoremReport("T4", n)
    star = tmc_exact(star_graph(n)).value
    rep.rows.append({"k": None, "check": "star", "formula": n, "empirical": star, "case": "star witness", "match": star == n})
    for k in range(3, comb(n, 2) + n + 1):
        formula = g_eval(n, k)
        emp = empirical_g(census, k)
        row = {"k": k, "formula": formula.value, "empirical": emp, "case": formula.case, "match": emp == formula.value}
        if not row["match"]:
            over = [rec for rec in census.records if rec.tmc > k]
            if over:
                row["counterexample"] = _counterexample(min(over, key=lambda rec: rec.m))
        rep.rows.append(row)
    return rep


def _theorem2(census: TmcCensus) -> TheoremReport:
    n = census.n
    rep = TheoremReport("T2", n)
    for rec in census.records:
        if not (n > 3 and _t2_applicable(rec.predicates)):
            continue
        expected = rec.m - n + 2 + rec.leaves
        row = {"graph6": rec.graph6, "formula": expected, "empirical": rec.tmc, "match": rec.tmc == expected}
        if not row["match"]:
            row["counterexample"] = _counterexample(rec)
        rep.rows.append(row)
    return rep


def _t2_applicable(preds: dict) -> bool:
    diam = preds["diameter"]
    return bool(
        preds["complement_4_connected"]
        or preds["k3_free"]
        or preds["degree_condition"]
        or diam is None
        or diam >= 3
        or preds["has_cut_vertex"]
    )


def _family_report(theorem: str, n: int, instances: Iterable[families.FamilyInstance]) -> TheoremReport:
    rep = TheoremReport(theorem, n)
    for inst in instances:
        if inst.graph.n != n:
            continue
        res = tmc_exact(inst.graph)
        row = {
            "params": json.dumps(inst.params, sort_keys=True),
            "formula": inst.predicted_tmc,
            "empirical": res.value,
            "match": res.value == inst.predicted_tmc,
        }
        if not row["match"]:
            g = inst.graph
            row["counterexample"] = {
                "graph6": graph6.encode(g),
                "tmc": res.value,
                "witness": json.loads(res.witness.to_json(g)),
            }
        rep.rows.append(row)
    if not rep.rows:
        rep.notes.append(f"no {theorem} instances of order {n}")
    return rep


def _lower_report(census: TmcCensus) -> TheoremReport:
    n = census.n
    rep = TheoremReport("L_LOWER", n)
    for rec in census.records:
        p = comb(n, 2) - rec.m
        if not 0 <= p <= n - 3:
            continue
        bound = complement_bound_value(n, p)
        row = {"graph6": rec.graph6, "p": p, "formula": bound, "empirical": rec.tmc, "match": rec.tmc >= bound}
        if p >= 1:
            g = rec.graph
            col = lower_bound_complement(g)
            _, _, core = complement_construction(g)
            row["constructed"] = count_colors(col)
            row["match"] = row["match"] and count_colors(col) == g.m + n - core and count_colors(col) >= bound
        if not row["match"]:
            row["counterexample"] = _counterexample(rec)
        rep.rows.append(row)
    return rep


def check_theorem(
    theorem: str,
    n: int,
    census: Optional[TmcCensus] = None,
    allow_long: bool = False,
    jobs: int = 1,
    cache_dir: Optional[Path] = None,
) -> TheoremReport:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if theorem.startswith("L_") and theorem != "L_LOWER":
        if n > LONG_CAP:
            raise ValueError(f"family checks capped at n={LONG_CAP}")
        gen = {
            "L_GTS": families.all_gts,
            "L_GNT": families.all_gnt,
            "L_GSTAR": families.all_gstar,
            "L_MULTI": families.all_multipartite,
        }[theorem]
        return _family_report(theorem, n, gen(n))
    if census is None or census.n != n:
        census = build_census(n, allow_long=allow_long, jobs=jobs, cache_dir=cache_dir)
    if theorem == "T2":
        return _theorem2(census)
    if theorem == "T3":
        return _theorem3(census)
    if theorem == "T4":
        return _theorem4(census)
    return _lower_report(census)


def sandwich_violations(census: TmcCensus) -> list[str]:
    """Records breaking ``m - n + 2 + l <= tmc <= m + n`` with equality on the right iff complete."""
    n = census.n
    out = []
    for rec in census.records:
        complete = rec.m == comb(n, 2)
        if not rec.m - n + 2 + rec.leaves <= rec.tmc <= rec.m + n or (rec.tmc == rec.m + n) != complete:
            out.append(rec.graph6)
    return out


def djs_violations(census: TmcCensus) -> list[str]:
    return [rec.graph6 for rec in census.records if not djs_bound_holds(rec.graph)]


def random_spanning_subgraph(g: Graph, rng: random.Random) -> Graph:
    """Random spanning tree of ``g`` plus a random subset of the remaining edges."""
    verts = list(range(g.n))
    rng.shuffle(verts)
    inside = 1 << verts[0]
    tree = []
    while inside != g.full_mask:
        frontier = [(u, v) for u in bits(inside) for v in bits(g.adj[u] & ~inside)]
        u, v = rng.choice(frontier)
        tree.append((min(u, v), max(u, v)))
        inside |= 1 << v
    extra = [e for e in g.edges if e not in set(tree) and rng.random() < 0.5]
    return Graph.from_edges(g.n, tree + extra)


def proposition1_spot_check(census: TmcCensus, count: int = 100, seed: int = 0) -> list[tuple[str, str]]:
    """Pairs ``(g, h)`` with ``tmc(g) < m(g) - m(h) + tmc(h)``; empty when the bound holds."""
    rng = random.Random(seed)
    failures = []
    for _ in range(count):
        rec = rng.choice(census.records)
        g = rec.graph
        h = random_spanning_subgraph(g, rng)
        if rec.tmc < g.m - h.m + tmc_exact(h).value:
            failures.append((rec.graph6, graph6.encode(h)))
    return failures


def witness_failures(census: TmcCensus) -> list[str]:
    """Records whose stored witness is not a TMC-coloring with ``tmc`` colors."""
    out = []
    for rec in census.records:
        g = rec.graph
        col = TotalColoring(dict(zip(g.edges, rec.edge_colors)), list(rec.vertex_colors))
        if not is_tmc(g, col) or count_colors(col) != rec.tmc:
            out.append(rec.graph6)
    return out
