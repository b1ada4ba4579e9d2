"""Batch front-end: verification sweeps, bound reports, means, certificates.

Output is machine-readable: one JSON object per line with sorted keys, or
CSV (same keys as header row) with --csv.  Identical seeds produce
byte-identical output.  Exit codes: 0 pass, 1 property violation, 2
usage/domain error, 3 hypothesis-check failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .certifier import CertTheorem, refine_to_tolerance
from .core import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    HypothesisError,
    Interval,
    catalog_by_id,
)
from .means import all_means, chain_check
from .oracle import check_convex_abs_d2, check_quasiconvex_abs_d2, integrate
from .suites import BOUND_THEOREMS, SUITE_NAMES, build_bound_report, run_suite

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_HYPOTHESIS = 3


def _add_format_flags(sub: argparse.ArgumentParser) -> None:
    fmt = sub.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON lines output (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV output, keys as header row")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hh",
        description="Midpoint-rule error bounds, their verification sweeps, "
                    "special means, and certified composite integration.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a named verification sweep")
    v.add_argument("--suite", required=True, choices=SUITE_NAMES)
    v.add_argument("--cases", type=int, default=50,
                   help="random subintervals per function (>= 1)")
    v.add_argument("--seed", type=int, default=0)
    _add_format_flags(v)

    b = sub.add_parser("bound", help="evaluate one bound on a catalog function")
    b.add_argument("function", help="catalog function id, e.g. x2, inv_x")
    b.add_argument("a", type=float)
    b.add_argument("b", type=float)
    b.add_argument("theorem", help="one of: " + ", ".join(BOUND_THEOREMS))
    b.add_argument("--q", type=float, help="power-mean or conjugate exponent q")
    b.add_argument("--p", type=float, help="conjugate exponent p")
    _add_format_flags(b)

    m = sub.add_parser("means", help="print the special means of a pair")
    m.add_argument("a", type=float)
    m.add_argument("b", type=float)
    _add_format_flags(m)

    c = sub.add_parser("certify", help="composite midpoint integral with error radius")
    c.add_argument("function")
    c.add_argument("a", type=float)
    c.add_argument("b", type=float)
    c.add_argument("tol", type=float)
    _add_format_flags(c)

    return parser


def _emit(rows: list[dict], as_csv: bool) -> None:
    out = sys.stdout
    if not as_csv:
        for row in rows:
            out.write(json.dumps(row, sort_keys=True) + "\n")
        return
    if not rows:
        return
    keys = sorted(rows[0])
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(keys)
    for row in rows:
        writer.writerow([json.dumps(row[k], sort_keys=True) for k in keys])


def _lookup_function(name: str):
    fn = catalog_by_id().get(name)
    if fn is None:
        raise DomainError(f"unknown function {name!r}; catalog: "
                          + ", ".join(sorted(catalog_by_id())))
    return fn


def _cmd_verify(args: argparse.Namespace) -> int:
    lines = run_suite(args.suite, args.cases, args.seed)
    _emit([line.as_dict() for line in lines], args.csv)
    return EXIT_PASS if all(line.passed for line in lines) else EXIT_VIOLATION


def _cmd_bound(args: argparse.Namespace) -> int:
    fn = _lookup_function(args.function)
    iv = Interval(args.a, args.b)
    report = build_bound_report(fn, iv, args.theorem, q=args.q, p=args.p)
    _emit([{
        "theorem": report.theorem_id.value,
        "bound": report.bound,
        "true_gap": report.true_gap,
        "slack": report.slack,
        "valid": report.valid,
    }], args.csv)
    return EXIT_PASS if report.valid else EXIT_VIOLATION


def _cmd_means(args: argparse.Namespace) -> int:
    row = all_means(args.a, args.b)
    row["chain"] = chain_check(args.a, args.b)
    _emit([row], args.csv)
    return EXIT_PASS


def _cmd_certify(args: argparse.Namespace) -> int:
    if not args.tol > 0.0:
        raise DomainError(f"tolerance must be positive, got {args.tol}")
    fn = _lookup_function(args.function)
    iv = Interval(args.a, args.b)
    if not fn.defined_on(iv):
        raise DomainError(f"[{iv.a}, {iv.b}] is outside the domain of {fn.id!r}")
    if check_convex_abs_d2(fn, iv):
        theorem = CertTheorem.CONVEX_Q1
    elif check_quasiconvex_abs_d2(fn, iv):
        theorem = CertTheorem.QUASI_Q1
    else:
        raise HypothesisError(
            f"class check failed: |f''| of {fn.id!r} is neither convex nor "
            f"quasi-convex on [{iv.a}, {iv.b}]")
    result = refine_to_tolerance(fn, iv, args.tol, theorem, check_class=False)
    oracle = integrate(fn.f, iv, min(args.tol * 1e-2, 1e-10))
    enclosed = abs(result.estimate - oracle.value) <= (
        result.error_radius + oracle.est_error)
    _emit([{
        "estimate": result.estimate,
        "error_radius": result.error_radius,
        "n": result.subintervals,
        "oracle_value": oracle.value,
        "enclosed": enclosed,
    }], args.csv)
    return EXIT_PASS if enclosed else EXIT_VIOLATION


_COMMANDS = {
    "verify": _cmd_verify,
    "bound": _cmd_bound,
    "means": _cmd_means,
    "certify": _cmd_certify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except HypothesisError as exc:
        print(f"hh: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except DomainError as exc:
        print(f"hh: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, EvaluationError) as exc:
        print(f"hh: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
