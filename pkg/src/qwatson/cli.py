"""Command-line interface: list identities, verify, evaluate at a point.

Exit codes: 0 all checks passed, 1 identity failure, 2 usage or
configuration error, 3 degenerate evaluation point.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from qwatson.catalog import CATALOG, get_case
from qwatson.errors import (
    ConstraintViolated,
    DegenerateDenominator,
    QWatsonError,
    UnknownIdentity,
)
from qwatson.exact import ParamPoint, rational_sqrt
from qwatson.series import SeriesSpec, phi_eval
from qwatson.verify import SampleConfig, run_suite

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Exact rational literal: integer or p/r with optional leading minus.

    Decimals are rejected on purpose: they would suggest approximate
    checking, and everything here is exact.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"not an exact rational literal (use p/r or an integer): {text!r}"
        )
    return Fraction(text)


def _rational_list(text: str) -> list[Fraction]:
    if not text:
        return []
    return [parse_rational(part) for part in text.split(",")]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwatson",
        description="Exact verification of terminating q-hypergeometric summation formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the identity catalog")

    p_verify = sub.add_parser("verify", help="run the randomized exact verification suite")
    p_verify.add_argument("--all", action="store_true", help="verify every catalog identity")
    p_verify.add_argument(
        "--id", action="append", default=[], metavar="KEY", help="identity to verify (repeatable)"
    )
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--trials", type=int, default=100, help="non-degenerate trials per identity")
    p_verify.add_argument("--n-max", type=int, default=8)
    p_verify.add_argument("--eps-max", type=int, default=4)
    p_verify.add_argument("--height", type=int, default=10, help="max numerator/denominator of sampled rationals")
    p_verify.add_argument("--json", metavar="PATH", help="also write the JSON report here")

    p_eval = sub.add_parser("eval", help="evaluate one identity (or a raw series) at a point")
    p_eval.add_argument("--id", metavar="KEY", help="catalog identity to evaluate")
    p_eval.add_argument("--q", type=parse_rational)
    p_eval.add_argument("--A", type=parse_rational)
    p_eval.add_argument("--C", type=parse_rational)
    p_eval.add_argument("--n", type=int)
    p_eval.add_argument("--eps", type=int, default=0)
    p_eval.add_argument("--nums", type=_rational_list, help="raw series: comma-separated numerator parameters")
    p_eval.add_argument("--dens", type=_rational_list, help="raw series: comma-separated denominator parameters")
    p_eval.add_argument("--z", type=parse_rational, help="raw series: argument")
    p_eval.add_argument("--bound", type=int, help="raw series: inclusive summation bound")

    return parser


def cmd_list() -> int:
    for key, case in CATALOG.items():
        print(
            f"{key:8s}  {case.ref:45s}  constraints: {case.constraint_text:45s}  "
            f"LHS: {case.lhs_shape}; RHS: {case.rhs_shape}"
        )
    return 0


def cmd_verify(args) -> int:
    keys = list(CATALOG) if args.all else list(dict.fromkeys(args.id))
    if not keys:
        print("error: nothing to verify (pass --all or --id KEY)", file=sys.stderr)
        return 2
    for key in keys:
        if key not in CATALOG:
            print(f"error: unknown identity id: {key!r}", file=sys.stderr)
            return 2
    try:
        config = SampleConfig(
            seed=args.seed,
            trials_per_identity=args.trials,
            n_max=args.n_max,
            eps_max=args.eps_max,
            rational_height=args.height,
        )
        report = run_suite(config, keys)
    except (ValueError, QWatsonError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    header = f"{'id':8s} {'reference':42s} {'trials':>6s} {'pass':>5s} {'fail':>5s} {'degen':>6s} {'ms':>8s}"
    print(header)
    print("-" * len(header))
    for r in report.results:
        print(
            f"{r.key:8s} {r.ref:42s} {r.trials:6d} {r.passes:5d} "
            f"{len(r.failures):5d} {r.degeneracies:6d} {r.wall_ms:8.1f}"
        )
        for f in r.failures:
            print(f"  FAIL at {f.point}: lhs={f.lhs} rhs={f.rhs}")
    if report.cord2_probe is not None:
        probe = report.cord2_probe
        print(
            f"cor-d2 upper-parameter probe over {probe['trials']} points: "
            f"matches {probe['matches']} -> printed closed form matches {probe['matched']}"
        )
    total_fail = report.total_failures
    total = sum(r.trials for r in report.results)
    print(f"total: {total} trials, {total - total_fail} passes, {total_fail} failures")

    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(report.to_json())
        print(f"json report written to {args.json}")
    return 1 if total_fail else 0


def _eval_raw_series(args) -> int:
    missing = [
        name
        for name, value in (("--q", args.q), ("--z", args.z), ("--bound", args.bound))
        if value is None
    ]
    if args.nums is None and args.dens is None:
        missing.append("--nums/--dens")
    if missing:
        print(f"error: raw series evaluation needs {', '.join(missing)}", file=sys.stderr)
        return 2
    spec = SeriesSpec(
        tuple(args.nums or []), tuple(args.dens or []), args.z, args.bound
    )
    try:
        value = phi_eval(spec, args.q)
    except DegenerateDenominator as exc:
        print(f"degenerate series: {exc}", file=sys.stderr)
        return 3
    print(f"VALUE = {value.numerator}/{value.denominator}")
    return 0


def cmd_eval(args) -> int:
    if args.id is None:
        return _eval_raw_series(args)
    try:
        case = get_case(args.id)
    except UnknownIdentity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    missing = [
        name
        for name, value in (("--q", args.q), ("--A", args.A), ("--C", args.C), ("--n", args.n))
        if value is None
    ]
    if missing:
        print(f"error: eval needs {', '.join(missing)}", file=sys.stderr)
        return 2
    if case.needs_square_q and rational_sqrt(args.q) is None:
        print(
            f"error: {case.key} evaluates sqrt(q*a*c) = sqrt(q)*A*C, so --q must be "
            f"a perfect rational square (e.g. 1/4, 9/25); got {args.q}",
            file=sys.stderr,
        )
        return 2
    try:
        point = ParamPoint(args.q, args.A, args.C, args.n, args.eps)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        lhs = case.lhs_value(point)
        rhs = case.rhs_value(point)
    except ConstraintViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateDenominator as exc:
        print(f"degenerate point: {exc}", file=sys.stderr)
        return 3
    print(f"LHS = {lhs.numerator}/{lhs.denominator}")
    print(f"RHS = {rhs.numerator}/{rhs.denominator}")
    if lhs == rhs:
        print("EQUAL")
        return 0
    print("DIFFER")
    return 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        return cmd_list()
    if args.command == "verify":
        return cmd_verify(args)
    return cmd_eval(args)


if __name__ == "__main__":
    sys.exit(main())
