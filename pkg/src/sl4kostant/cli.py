"""Command-line entry point.

Exit codes: 0 ok, 1 failed verification, 2 usage error, 3 precondition
violated, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from .alternation import (
    LatticeWindow, altset, classify_mu_zero_octant, MU_ZERO_SETS, default_mu_set,
    diagram_export, empty_region, enumerate_distinct_altsets,
)
from .bench import EngineMismatch, run_bench
from .errors import PreconditionViolated
from .export import (
    diagram_csv, diagram_json, diagram_svgs, region_csv, region_json, region_svgs,
)
from .qmult import mq_closed, mq_direct
from .qpartition import ENGINES
from .verify import SUITES
from .weights import FWeight

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_IO = 0, 1, 2, 3, 4

# options whose values may begin with "-"
_VALUE_OPTS = {"--x", "--y", "--z", "--range", "--mu"}


def _glue_negative_values(argv: Sequence[str]) -> List[str]:
    out: List[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _interval(text: str) -> Tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b, got {text!r}")


def _triple(text: str) -> FWeight:
    try:
        m, n, k = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n,k, got {text!r}")
    return FWeight(m, n, k)


def _engines(text: str) -> List[str]:
    names = [t for t in text.split(",") if t]
    bad = [t for t in names if t not in ENGINES]
    if bad or not names:
        raise argparse.ArgumentTypeError(f"unknown engine(s) {bad}; choose from {sorted(ENGINES)}")
    return names


def _add_window(p: argparse.ArgumentParser, default: str):
    for axis in ("x", "y", "z"):
        p.add_argument(f"--{axis}", type=_interval, default=_interval(default),
                       help=f"inclusive {axis} range a:b (default {default})")
    p.add_argument("--mu", type=_triple, default=FWeight(0, 0, 0),
                   help="mu in fundamental-weight coordinates m,n,k (default 0,0,0)")
    p.add_argument("--format", choices=("human", "json", "csv", "svg"), default="human")
    p.add_argument("--output", "-o", help="output file, or directory for svg")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sl4kostant",
        description="Exact q-partition functions, alternation sets and q-multiplicities for sl4.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="q-analog of Kostant's partition function")
    for name in ("m", "n", "k"):
        p.add_argument(name, type=int, help=f"{name}, coefficient of a simple root")
    p.add_argument("--q1", action="store_true", help="print the value at q = 1")
    p.add_argument("--oracle", choices=sorted(ENGINES), default="closed")

    p = sub.add_parser("mult", help="q-analog of the weight multiplicity m_q(lambda, mu)")
    for name in ("m", "n", "k", "c1", "c2", "c3"):
        p.add_argument(name, type=int)
    p.add_argument("--direct", action="store_true", help="use the alternating sum over W")
    p.add_argument("--q1", action="store_true", help="print the value at q = 1")

    p = sub.add_parser("altset", help="the alternation set A(lambda, mu)")
    for name in ("m", "n", "k", "c1", "c2", "c3"):
        p.add_argument(name, type=int)
    p.add_argument("--method", choices=("conditions", "bruteforce"), default="conditions")

    p = sub.add_parser("classify", help="label of A(x*a1 + y*a2 + z*a3, 0) on the dominant cone")
    for name in ("x", "y", "z"):
        p.add_argument(name, type=int)

    p = sub.add_parser("enumerate", help="distinct alternation sets over a window")
    for axis in ("x", "y", "z"):
        p.add_argument(f"--{axis}", type=_interval, default=(-20, 20))
    p.add_argument("--mu", type=_triple, action="append",
                   help="mu to scan (repeatable); default: root-lattice dominant mu up to --mu-max")
    p.add_argument("--mu-max", type=int, default=4)
    p.add_argument("--route", choices=("conditions", "action"), default="conditions")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("diagram", help="export an alternation diagram")
    _add_window(p, "-5:5")
    p = sub.add_parser("empty-region", help="export the points with empty alternation set")
    _add_window(p, "-10:10")

    p = sub.add_parser("verify", help="run self-check suites")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max", type=int, default=None, help="size bound of the suite")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("bench", help="time the q-partition engines")
    p.add_argument("--range", type=_interval, default=(60, 70),
                   help="half-open a:b range for each of m, n, k (default 60:70)")
    p.add_argument("--engines", type=_engines, default=["closed", "sum"])
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--threads", type=int, default=1, help="accepted for symmetry; timing is serial")
    return parser


def _write(text: str, output: Optional[str]):
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _cmd_partition(args) -> int:
    poly = ENGINES[args.oracle](args.m, args.n, args.k)
    print(poly.eval_at_one() if args.q1 else poly)
    return EXIT_OK


def _cmd_mult(args) -> int:
    lam = FWeight(args.m, args.n, args.k)
    mu = FWeight(args.c1, args.c2, args.c3)
    if args.direct:
        poly, case_line = mq_direct(lam, mu), None
    else:
        poly, case = mq_closed(lam, mu, with_case=True)
        case_line = "case: " + (case.label() if case else "0")
    print(poly.eval_at_one() if args.q1 else poly)
    if case_line:
        print(case_line)
    print(f"A = {altset(lam, mu)}")
    return EXIT_OK


def _cmd_altset(args) -> int:
    lam = FWeight(args.m, args.n, args.k)
    mu = FWeight(args.c1, args.c2, args.c3)
    print(altset(lam, mu, method=args.method))
    return EXIT_OK


def _cmd_classify(args) -> int:
    label = classify_mu_zero_octant(args.x, args.y, args.z)
    print(f"{label} = {MU_ZERO_SETS[label]}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    mus = tuple(args.mu) if args.mu else default_mu_set(args.mu_max)
    win = LatticeWindow(args.x, args.y, args.z, mus)
    reg = enumerate_distinct_altsets(win, route=args.route, workers=args.threads)
    if args.format == "json":
        obj = {"distinct": len(reg), "max_cardinality": reg.max_cardinality(),
               "registry": [{"id": i, "elements": s.words(), "count": c}
                            for i, (s, c) in enumerate(zip(reg.sets, reg.counts))]}
        print(json.dumps(obj))
        return EXIT_OK
    print(f"distinct sets: {len(reg)}")
    print(f"max cardinality: {reg.max_cardinality()}")
    for i, (s, c) in enumerate(zip(reg.sets, reg.counts)):
        print(f"{i:>4} {len(s):>2} {c:>9} {s}")
    return EXIT_OK


def _window(args) -> LatticeWindow:
    return LatticeWindow(args.x, args.y, args.z, (args.mu,))


def _cmd_diagram(args) -> int:
    win = _window(args)
    if args.format == "svg" and not args.output:
        print("error: --format svg needs --output DIR", file=sys.stderr)
        return EXIT_USAGE
    if win.is_empty():
        if args.output and args.format != "svg":
            _write("", args.output)
        return EXIT_OK
    points, reg = diagram_export(win, args.mu)
    if args.format == "json":
        _write(diagram_json(args.mu, points, reg), args.output)
    elif args.format == "csv":
        _write(diagram_csv(points), args.output)
    elif args.format == "svg":
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        for z, doc in diagram_svgs(args.mu, points, reg).items():
            (outdir / f"diagram_z{z}.svg").write_text(doc)
    else:
        lines = [f"{len(points)} points, {len(reg)} distinct sets"]
        lines += [f"{i:>4} {c:>7} {s}" for i, (s, c) in enumerate(zip(reg.sets, reg.counts))]
        _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_empty_region(args) -> int:
    win = _window(args)
    if args.format == "svg" and not args.output:
        print("error: --format svg needs --output DIR", file=sys.stderr)
        return EXIT_USAGE
    if win.is_empty():
        if args.output and args.format != "svg":
            _write("", args.output)
        return EXIT_OK
    pts = empty_region(win, args.mu)
    if args.format == "json":
        _write(region_json(args.mu, pts), args.output)
    elif args.format == "csv":
        _write(region_csv(pts), args.output)
    elif args.format == "svg":
        outdir = Path(args.output)
        outdir.mkdir(parents=True, exist_ok=True)
        zs = range(args.z[0], args.z[1] + 1)
        for z, doc in region_svgs(args.mu, pts, zs).items():
            (outdir / f"empty_z{z}.svg").write_text(doc)
    else:
        _write(f"{len(pts)} of {win.points_per_mu()} points have an empty alternation set\n",
               args.output)
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        result = SUITES[name](args.max, workers=args.threads)
        for line in result.lines():
            print(line)
        ok &= result.ok
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_bench(args) -> int:
    lo, hi = args.range
    try:
        result = run_bench(lo, hi, args.engines, repeat=args.repeat)
    except EngineMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    for line in result.table():
        print(line)
    return EXIT_OK


_COMMANDS = {
    "partition": _cmd_partition, "mult": _cmd_mult, "altset": _cmd_altset,
    "classify": _cmd_classify, "enumerate": _cmd_enumerate, "diagram": _cmd_diagram,
    "empty-region": _cmd_empty_region, "verify": _cmd_verify, "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except PreconditionViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
