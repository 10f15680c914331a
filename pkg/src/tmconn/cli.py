"""Command-line interface.

Exit status: 0 success or pass, 1 a verification failure was found, 2 usage
or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional

from . import families, formulas, graph6, harness
from .coloring import ColoringError, TotalColoring, count_colors, is_tmc
from .exact import SolverCapError, tmc_exact
from .graph import Graph, is_connected

CACHE_ENV = "TMCONN_CACHE_DIR"


class UsageError(Exception):
    pass


def _read_graphs(args) -> list[Graph]:
    try:
        if args.graph6:
            return [graph6.decode(args.graph6)]
        if args.infile:
            with open(args.infile) as fh:
                return list(graph6.read_lines(fh))
        return list(graph6.read_lines(sys.stdin))
    except graph6.Graph6Error as exc:
        raise UsageError(f"malformed graph6: {exc}") from exc
    except OSError as exc:
        raise UsageError(str(exc)) from exc


def _jobs(args) -> int:
    return args.jobs if args.jobs else (os.cpu_count() or 1)


def _cache_dir(args) -> Optional[Path]:
    if getattr(args, "cache_dir", None):
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _out(args):
    return open(args.output, "w") if getattr(args, "output", None) else sys.stdout


def cmd_tmc(args) -> int:
    graphs = _read_graphs(args)
    if not graphs:
        raise UsageError("no input graph")
    if args.witness and len(graphs) != 1:
        raise UsageError("--witness needs exactly one input graph")
    for g in graphs:
        if not is_connected(g):
            raise UsageError(f"graph {graph6.encode(g)} is disconnected")
    try:
        jobs = _jobs(args)
        if jobs > 1 and len(graphs) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                solved = list(pool.map(tmc_exact, graphs, [args.mode] * len(graphs)))
        else:
            solved = [tmc_exact(g, args.mode) for g in graphs]
    except SolverCapError as exc:
        raise UsageError(str(exc)) from exc
    results = list(zip(graphs, solved))
    if args.witness:
        g, res = results[0]
        Path(args.witness).write_text(res.witness.to_json(g) + "\n")
    out = _out(args)
    if args.format == "csv":
        out.write("graph6,n,m,tmc,waste\n")
        for g, res in results:
            out.write(f"{graph6.encode(g)},{g.n},{g.m},{res.value},{res.waste}\n")
    elif args.format == "structured":
        for g, res in results:
            out.write(json.dumps({"graph6": graph6.encode(g), "n": g.n, "m": g.m, "tmc": res.value, "waste": res.waste}) + "\n")
    elif len(results) == 1:
        out.write(f"{results[0][1].value}\n")
    else:
        for g, res in results:
            out.write(f"{graph6.encode(g)} {res.value}\n")
    return 0


def cmd_verify_coloring(args) -> int:
    try:
        text = Path(args.coloring).read_text()
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    host = None
    if args.graph6 or args.infile:
        graphs = _read_graphs(args)
        if len(graphs) != 1:
            raise UsageError("verify-coloring takes exactly one graph")
        host = graphs[0]
    try:
        g, col = TotalColoring.from_json(text, host)
    except (ColoringError, ValueError) as exc:
        raise UsageError(f"schema mismatch: {exc}") from exc
    if not is_connected(g):
        raise UsageError("graph is disconnected")
    verdict = is_tmc(g, col)
    ncol = count_colors(col)
    if verdict:
        print(f"valid, {ncol} colors")
        return 0
    u, v = verdict.failing_pair
    print(f"invalid, no total monochromatic path between {u} and {v}, {ncol} colors")
    return 1


def _instance(args) -> families.FamilyInstance:
    fam = args.family
    need = {
        "gts": ("n", "t", "s"),
        "gnt": ("n", "p"),
        "gnt3": ("n",),
        "gstar": ("n", "t", "extra"),
        "multipartite": ("parts",),
        "complete": ("n",),
        "star": ("n",),
        "path": ("n",),
    }[fam]
    missing = [name for name in need if getattr(args, name) is None]
    if missing:
        raise UsageError(f"family {fam} needs --{' --'.join(missing)}")
    vals = [getattr(args, name) for name in need]
    if fam == "multipartite":
        try:
            vals = [[int(x) for x in args.parts.split(",")]]
        except ValueError as exc:
            raise UsageError("--parts must be comma-separated integers") from exc
    gen = {
        "gts": families.gen_gts,
        "gnt": families.gen_gnt,
        "gnt3": families.gen_gnt3,
        "gstar": families.gen_gstar,
        "multipartite": families.gen_multipartite,
        "complete": families.gen_complete,
        "star": families.gen_star,
        "path": families.gen_path,
    }[fam]
    try:
        return gen(*vals)
    except families.FamilyParameterError as exc:
        raise UsageError(str(exc)) from exc


def cmd_families(args) -> int:
    inst = _instance(args)
    text = graph6.encode(inst.graph)
    meta = {"family": inst.family, "params": inst.params, "predicted_tmc": inst.predicted_tmc, "m": inst.graph.m}
    if args.format == "structured":
        print(json.dumps({"graph6": text, **meta}, sort_keys=True))
    elif args.format == "csv":
        print("graph6,family,n,m,predicted_tmc")
        print(f"{text},{inst.family},{inst.graph.n},{inst.graph.m},{inst.predicted_tmc}")
    else:
        print(text)
        print(json.dumps(meta, sort_keys=True))
    return 0


def cmd_formulas(args) -> int:
    evaluate = formulas.f_eval if args.which == "f" else formulas.g_eval
    try:
        if args.k is not None:
            rows = [evaluate(args.n, args.k)]
        else:
            rows = formulas.f_table(args.n) if args.which == "f" else formulas.g_table(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = _out(args)
    if args.format == "human" and args.k is not None:
        out.write(rows[0].describe() + "\n")
    elif args.format == "structured":
        for r in rows:
            out.write(json.dumps({"n": r.n, "k": r.k, "value": r.value, "case": r.case, "t": r.t, "s": r.s, "r": r.r}) + "\n")
    else:
        out.write(formulas.CSV_HEADER + "\n")
        for r in rows:
            out.write(formulas.csv_row(r) + "\n")
    return 0


def cmd_verify(args) -> int:
    try:
        report = harness.check_theorem(
            args.theorem, args.n, allow_long=args.long, jobs=_jobs(args), cache_dir=_cache_dir(args)
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = _out(args)
    if args.format == "structured":
        out.write(report.to_json() + "\n")
    elif args.format == "csv":
        out.write("\n".join(report.csv_lines()) + "\n")
    else:
        status = "PASS" if report.passed else "FAIL"
        out.write(f"{args.theorem} n={args.n}: {status} ({len(report.rows)} checks, {len(report.counterexamples)} failures)\n")
        for note in report.notes:
            out.write(f"  note: {note}\n")
        for row in report.counterexamples:
            out.write("  " + json.dumps(row, sort_keys=True) + "\n")
    return 0 if report.passed else 1


def _graph_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph6", help="inline graph6 string")
    p.add_argument("--in", dest="infile", help="file with one graph6 per line (default: standard input)")


def _fmt(p: argparse.ArgumentParser, default: str = "human") -> None:
    p.add_argument("--format", choices=("human", "csv", "structured"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tmconn", description="Total monochromatic connection toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tmc", help="exact tmc(G) (definition of tmc)", description="Compute tmc(G) exactly with a verified witness coloring.")
    _graph_source(p)
    _fmt(p)
    p.add_argument("--mode", choices=("simple", "unrestricted"), default="simple")
    p.add_argument("--witness", help="write the witness coloring to this path")
    p.add_argument("--output", help="write results here instead of standard output")
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_tmc)

    p = sub.add_parser(
        "verify-coloring",
        help="check a TMC-coloring file (TMC-coloring definition)",
        description="Check that a coloring file is a TMC-coloring. The graph comes from --graph6/--in or, when omitted, from the file itself.",
    )
    _graph_source(p)
    p.add_argument("--coloring", required=True, help="coloring JSON with n, edges, edge_colors, vertex_colors")
    p.set_defaults(func=cmd_verify_coloring)

    p = sub.add_parser("families", help="extremal families (G_{t,s}, G_n^t, G*, Lemma 1 multipartite)")
    fsub = p.add_subparsers(dest="action", required=True)
    g = fsub.add_parser(
        "gen",
        help="generate one instance",
        description="Generate a family instance with its predicted tmc: gts (G_{t,s} lemma), gnt/gnt3 (G_n^t lemma), "
        "gstar (sharpness graph G*), multipartite (Lemma 1), complete, star, path (Theorem 1 equality).",
    )
    g.add_argument("--family", required=True, choices=("gts", "gnt", "gnt3", "gstar", "multipartite", "complete", "star", "path"))
    for name in ("n", "t", "s", "p", "extra"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--parts", help="comma-separated part sizes")
    _fmt(g)
    g.set_defaults(func=cmd_families)

    p = sub.add_parser("formulas", help="closed forms f(n,k) (Theorem 3) and g(n,k) (Theorem 4)")
    fsub = p.add_subparsers(dest="which", required=True)
    for which, thm in (("f", "Theorem 3"), ("g", "Theorem 4")):
        q = fsub.add_parser(which, help=f"evaluate {which}(n,k) ({thm})", description=f"Evaluate {which}(n,k) from {thm}; without --k, print the full table as CSV.")
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--k", type=int)
        q.add_argument("--output")
        _fmt(q)
        q.set_defaults(func=cmd_formulas)
    q = fsub.add_parser("table", help="full f or g table as CSV (Theorems 3 and 4)")
    q.add_argument("kind", choices=("f", "g"))
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--output")
    _fmt(q, "csv")
    q.set_defaults(func=lambda a: cmd_formulas(argparse.Namespace(**{**vars(a), "which": a.kind, "k": None})))

    p = sub.add_parser(
        "verify",
        help="exhaustive reproduction of Theorems 2-4 and the family lemmas",
        description="T2: Theorem 2; T3: Theorem 3 (f); T4: Theorem 4 (g); L_GTS, L_GNT, L_GSTAR, L_MULTI: "
        "family lemmas (G_{t,s}, G_n^t, G*, Lemma 1); L_LOWER: the C(n,2)+n-3p lower bound.",
    )
    p.add_argument("--theorem", required=True, choices=harness.THEOREMS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--long", action="store_true", help="allow the n=8 census (11117 graphs)")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: all cores)")
    p.add_argument("--cache-dir", help=f"census cache directory (default: ${CACHE_ENV})")
    p.add_argument("--output")
    _fmt(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
