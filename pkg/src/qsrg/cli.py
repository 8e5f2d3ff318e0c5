"""Command line interface: ``qsrg <subcommand> ...``.

Exit codes: 0 success, 1 regular but not strongly regular (or a failed
check), 2 invalid input, 3 not regular, 4 wrong parameter shape for a
neighborhood design, 5 a graph outside the known families was found,
6 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from qsrg import __version__
from qsrg.algebra import GF
from qsrg.analysis import (
    collapse,
    connected_components,
    neighborhood_design,
    parameter_identity,
    projective_count_decompose,
    verify_classical_srg,
    verify_design,
)
from qsrg.classify import classify_report
from qsrg.constructions import complete, desarguesian_spread, spread_graph, symplectic_graph
from qsrg.errors import NotStronglyRegular, QSRGError, WrongParameterShape
from qsrg.qgraph import QaryGraph, is_regular, srg_parameters, validate_graph

LOG = logging.getLogger("qsrg")

EXIT_OK = 0
EXIT_NOT_SRG = 1
EXIT_INVALID = 2
EXIT_NOT_REGULAR = 3
EXIT_WRONG_SHAPE = 4
EXIT_OTHER_FAMILY = 5
EXIT_BUDGET = 6


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def write_json(path, obj):
    Path(path).write_text(dumps(obj))


def write_manifest(out_path, subcommand, params, inputs, wall_time):
    manifest = {
        "subcommand": subcommand,
        "parameters": params,
        "inputs": [str(p) for p in inputs],
        "output": str(out_path),
        "determinism": "no randomness; identical parameters give byte-identical output",
        "wall_time": round(wall_time, 6),
        "version": __version__,
    }
    Path(str(out_path) + ".manifest.json").write_text(json.dumps(manifest, indent=2) + "\n")


def load_graph(path) -> QaryGraph:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read graph file {path}: {exc}") from exc
    g = QaryGraph.from_json(data)
    validate_graph(g)
    return g


def _fmt(x):
    return "undefined" if x is None else str(x)


# -- subcommands --------------------------------------------------------------


def cmd_construct(args) -> int:
    t0 = time.perf_counter()
    F = GF(args.q)
    if args.type == "complete":
        g = complete(args.v, F)
    elif args.type == "spread":
        if args.t is None:
            raise UsageError("--t is required for spread graphs")
        g = spread_graph(desarguesian_spread(args.v, args.t, F))
    else:
        g = symplectic_graph(args.v, F)
    text = dumps(g.to_json())
    if args.out:
        Path(args.out).write_text(text)
        params = {"type": args.type, "v": args.v, "q": args.q, "t": args.t}
        write_manifest(args.out, "construct", params, [], time.perf_counter() - t0)
        print(f"{args.type} graph: {len(g.edges)} edges -> {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    k = is_regular(g)
    report = {"valid": True, "edges": len(g.edges), "regular": k is not None, "k": k}
    code = EXIT_NOT_REGULAR
    if k is None:
        line = "not regular"
    else:
        params = srg_parameters(g)
        if params is None:
            line = f"regular k={k}, not strongly regular"
            code = EXIT_NOT_SRG
        else:
            code = EXIT_OK
            report["srg"] = params.to_json()
            line = f"{params}"
            if params.lambda_ is not None and params.mu is not None:
                check = parameter_identity(g.v, k, params.lambda_, params.mu, g.q)
                report["identity"] = {"holds": check.holds, "lhs": check.lhs, "rhs": check.rhs}
                line += f", identity {check.lhs}={check.rhs}"
            else:
                line += f" (regular k={k}, lambda {_fmt(params.lambda_)}, mu {_fmt(params.mu)})"
    report["verdict"] = line
    _emit(args, report, line)
    return code


def cmd_design(args) -> int:
    t0 = time.perf_counter()
    g = load_graph(args.graph)
    try:
        d = neighborhood_design(g)
    except (WrongParameterShape, NotStronglyRegular) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WRONG_SHAPE
    bad = verify_design(d)
    if args.out:
        write_json(args.out, d.to_json())
        write_manifest(args.out, "design", {}, [args.graph], time.perf_counter() - t0)
    label = f"2-({g.v},{d.k},{d.lambda_};{g.q}) design, {len(d.blocks)} blocks"
    if bad is None:
        line = f"{label}, verified"
    else:
        line = f"{label}, FAILED at {list(map(list, bad.subspace.basis))} (count {bad.count})"
    _emit(args, {"t": d.t, "k": d.k, "lambda": d.lambda_, "blocks": len(d.blocks), "verified": bad is None}, line)
    return EXIT_OK if bad is None else EXIT_NOT_SRG


def cmd_collapse(args) -> int:
    t0 = time.perf_counter()
    g = load_graph(args.graph)
    c = collapse(g)
    if args.out:
        write_json(args.out, c.to_json())
        write_manifest(args.out, "collapse", {}, [args.graph], time.perf_counter() - t0)
    res = verify_classical_srg(c)
    comps = len(connected_components(c))
    if res is None:
        line = f"classical graph on {c.n} vertices: not strongly regular"
        report = {"n": c.n, "srg": None, "components": comps}
    else:
        line = f"SRG({res.n},{res.k},{_fmt(res.lambda_)},{_fmt(res.mu)}), {comps} component(s)"
        report = {"n": res.n, "srg": {"k": res.k, "lambda": res.lambda_, "mu": res.mu}, "components": comps}
    _emit(args, report, line)
    return EXIT_OK if res is not None else EXIT_NOT_SRG


def cmd_classify(args) -> int:
    t0 = time.perf_counter()
    if (args.lambda_ is None) != (args.mu is None):
        raise UsageError("give both --lambda and --mu, or neither")
    if args.lambda_ is not None and args.k is None:
        raise UsageError("--lambda/--mu need --k")
    report = classify_report(
        args.v,
        args.q,
        k=args.k,
        lambda_=args.lambda_,
        mu=args.mu,
        node_budget=args.nodes,
        workers=args.workers,
        symmetry_fixing=args.fix_symmetry,
    )
    data = report.to_json()
    if args.out:
        write_json(args.out, data)
        params = {
            "v": args.v,
            "q": args.q,
            "k": args.k,
            "lambda": args.lambda_,
            "mu": args.mu,
            "nodes": args.nodes,
            "workers": args.workers,
            "fix_symmetry": args.fix_symmetry,
        }
        write_manifest(args.out, "classify", params, [], time.perf_counter() - t0)
    if args.graphs_out:
        with open(args.graphs_out, "w") as fh:
            for t in report.tuples:
                for g in t.graphs:
                    fh.write(dumps(g.to_json()))
    lines = []
    for t in report.tuples:
        status = "" if t.complete else " [budget exhausted]"
        fam = ", ".join(f"{name}={n}" for name, n in t.families.items())
        count = "?" if t.count is None else t.count
        lines.append(f"SRG({args.v},{t.k},{t.lambda_},{t.mu};{args.q}): count {count} ({fam}), {t.nodes} nodes{status}")
    _emit(args, data, "\n".join(lines))
    if report.has_other:
        return EXIT_OTHER_FAMILY
    if not report.complete:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_params(args) -> int:
    check = parameter_identity(args.v, args.k, args.lambda_, args.mu, args.q)
    report = {"lhs": check.lhs, "rhs": check.rhs, "holds": check.holds}
    line = f"{check.lhs} = {check.rhs}, holds" if check.holds else f"{check.lhs} != {check.rhs}, fails"
    if args.q >= 2:
        dec = projective_count_decompose(args.lambda_, args.mu, args.q)
        report["decomposition"] = None if dec is None else {"l": dec[0], "m": dec[1]}
        line += "; not projective" if dec is None else f"; l={dec[0]}, m={dec[1]}"
    if check.holds:
        line += " (necessary, not sufficient)"
    _emit(args, report, line)
    return EXIT_OK if check.holds else EXIT_NOT_SRG


def _emit(args, report, line):
    if getattr(args, "json", False):
        sys.stdout.write(dumps(report))
    else:
        print(line)


# -- parser -------------------------------------------------------------------


def _budget(text: str) -> int:
    value = int(float(text))
    if value <= 0:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qsrg", description="Strongly regular q-ary graphs over finite fields.")
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    def output_flags(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="machine readable report on stdout")
        g.add_argument("--text", dest="json", action="store_false", help="human readable report (default)")

    p = sub.add_parser("construct", help="build a complete, spread or symplectic q-ary graph")
    p.add_argument("--type", required=True, choices=["complete", "spread", "symplectic"])
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check regularity and strong regularity of a graph file")
    p.add_argument("graph")
    output_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("design", help="extract and verify the neighborhood design")
    p.add_argument("graph")
    p.add_argument("-o", "--out")
    output_flags(p)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("collapse", help="collapse to a classical graph on the points")
    p.add_argument("graph")
    p.add_argument("-o", "--out")
    output_flags(p)
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("classify", help="exhaustively search strongly regular q-ary graphs")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--lambda", dest="lambda_", type=int)
    p.add_argument("--mu", type=int)
    p.add_argument("--nodes", type=_budget, default=10**7, help="node budget per parameter tuple")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--fix-symmetry", action="store_true")
    p.add_argument("-o", "--out")
    p.add_argument("--graphs-out", help="write found graphs as line-delimited JSON")
    output_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("params", help="evaluate the parameter identity and q-integer split")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda", dest="lambda_", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    output_flags(p)
    p.set_defaults(func=cmd_params)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, QSRGError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
