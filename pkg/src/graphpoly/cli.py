"""Command-line front end.

Exit codes: 0 success, 1 bad input or usage, 2 size guard tripped,
3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from . import cut, derived, indep, multipoly
from .errors import GraphFormatError, VerificationError, WorkLimitExceeded
from .graph import Graph, parse_graph
from .poly import Poly
from .verify import PROPERTIES, verify

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_VERIFY = 0, 1, 2, 3
DEFAULT_MAX_WORK = multipoly.DEFAULT_MAX_WORK


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphpoly", description="Graph polynomials of simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, methods=None):
        p.add_argument("--input", required=True, help="edge-list or DIMACS file ('-' for stdin)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK,
                       help="cap on live intermediate terms")
        if methods:
            p.add_argument("--method", choices=methods, default=methods[0])

    common(sub.add_parser("indep", help="independence polynomial"), ("esp", "extraction"))
    common(sub.add_parser("clique", help="clique polynomial"))
    common(sub.add_parser("cover", help="vertex-cover polynomial"), ("esp", "extraction"))
    common(sub.add_parser("cut", help="bipartite-cut polynomial"), ("laurent", "xor"))
    p = sub.add_parser("enumerate", help="list independent sets of one order")
    common(p)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", help="randomized cross-checks against brute force")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--p", type=float, default=0.3, help="edge probability")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _read_graph(path: str) -> Graph:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_graph(text)


def _compute(args, g: Graph):
    """Return (polynomial name, Poly, scalars dict) for a polynomial subcommand."""
    cmd, work = args.command, args.max_work
    if cmd == "indep":
        p = (indep.independence_polynomial(g, work) if args.method == "esp"
             else multipoly.indep_poly_by_extraction(g, work))
        return "independence", p, {"alpha": p.degree, "eta": p.degree + 1}
    if cmd == "clique":
        p = derived.clique_polynomial(g, work)
        return "clique", p, {"gamma": p.degree}
    if cmd == "cover":
        p = (derived.vertex_cover_polynomial(g, work) if args.method == "esp"
             else multipoly.cover_poly_by_extraction(g, work))
        return "vertex cover", p, {"beta": p.low_degree}
    if cmd == "cut":
        p = (cut.cut_polynomial_laurent(g, work) if args.method == "laurent"
             else cut.cut_polynomial_xor(g))
        return "bipartite cut", p, {"expected_cut": str(cut.expected_random_cut(p))}
    raise AssertionError(cmd)


def _report(g: Graph, name: str, method: str, p: Poly, scalars: dict, ms: int) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "polynomial": {"name": name, "method": method, "coeffs": [str(c) for c in p.coeffs]},
        "scalars": scalars,
        "ms": ms,
    }


def _emit(report: dict, fmt: str, p: Optional[Poly], out) -> None:
    if fmt == "json":
        out.write(json.dumps(report, sort_keys=False) + "\n")
        return
    out.write(f"graph: n={report['n']} m={report['m']}\n")
    poly = report["polynomial"]
    out.write(f"{poly['name']} polynomial ({poly['method']}): {p}\n")
    for key, val in report["scalars"].items():
        out.write(f"{key}={val}\n")
    for s in report.get("sets", []):
        out.write(" ".join(map(str, s)) + "\n")
    out.write(f"time: {report['ms']} ms\n")


def _run_verify(args, out) -> int:
    rep = verify(args.seed, args.count, args.n_max, args.p)
    if args.format == "json":
        doc = {
            "seed": args.seed,
            "count": args.count,
            "n_max": args.n_max,
            "properties": {
                name: {"passed": rep.passed[name], "failed": rep.failed[name],
                       "skipped": rep.skipped[name]}
                for name in PROPERTIES
            },
            "failures": rep.failures,
        }
        out.write(json.dumps(doc) + "\n")
    else:
        for name in PROPERTIES:
            status = "FAIL" if rep.failed[name] else "pass"
            out.write(f"{status} {name}: {rep.passed[name]} passed, {rep.failed[name]} failed, "
                      f"{rep.skipped[name]} skipped\n")
        for f in rep.failures:
            out.write(f"--- {f['property']}: {f['detail']}\n{f['graph']}")
    return EXIT_OK if rep.ok else EXIT_VERIFY


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_INPUT

    try:
        if args.command == "verify":
            return _run_verify(args, out)
        g = _read_graph(args.input)
        start = time.perf_counter()
        if args.command == "enumerate":
            sets = indep.enumerate_independent_sets(g, args.k, args.max_work)
            p = indep.independence_polynomial(g, args.max_work)
            report = _report(g, "independence", "esp", p, {"k": args.k, "count": len(sets)}, 0)
            report["sets"] = [list(s) for s in sets]
        else:
            name, p, scalars = _compute(args, g)
            method = getattr(args, "method", "esp")
            report = _report(g, name, method, p, scalars, 0)
        report["ms"] = int((time.perf_counter() - start) * 1000)
        _emit(report, args.format, p, out)
        return EXIT_OK
    except (GraphFormatError, OSError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    except WorkLimitExceeded as exc:
        err.write(f"size guard: {exc}\n")
        return EXIT_GUARD
    except VerificationError as exc:
        err.write(f"verification failed: {exc}\n")
        return EXIT_VERIFY


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
