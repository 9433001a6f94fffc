"""Command-line front end: family tables and the identity verification suite.

Output is deterministic byte-for-byte across runs: fixed JSON field order,
graded-lex polynomial term order, CSV with a header row.  Wall-clock
timings are therefore omitted unless ``--timings`` is given.

Exit codes: 0 success / all identities pass, 1 any verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .bipoly import BiPoly
from .families import (
    CATALOG,
    Argument,
    FamilyId,
    FamilySpec,
    LambdaMode,
    build_egf,
    central_factorial_power,
    list_families,
    triangular_numbers,
)
from .identities import (
    ALIASES,
    IdentityId,
    UnknownIdentity,
    VerificationReport,
    coerce_identity,
    default_ranges,
    verify,
    verify_all,
)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from exc


def _symbolic_or_rational(text: str) -> str | Fraction:
    if text == "symbolic":
        return "symbolic"
    return _rational(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenpoly",
        description="Exact tables and identity verification for degenerate "
        "special-polynomial families over Q[l, x].",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    comp = sub.add_parser("compute", help="tabulate one family")
    comp.add_argument(
        "--family",
        required=True,
        choices=[f.value for f in FamilyId],
        help="family name (see list-families)",
    )
    comp.add_argument("--max-n", type=int, required=True, help="largest index, inclusive")
    comp.add_argument(
        "--order", type=_rational, default=Fraction(1), help="order parameter (rational)"
    )
    comp.add_argument(
        "--lambda",
        dest="lam",
        type=_symbolic_or_rational,
        default="symbolic",
        help="'symbolic' or a rational literal",
    )
    comp.add_argument(
        "--x",
        dest="x_arg",
        type=_symbolic_or_rational,
        default="symbolic",
        help="'symbolic' or a rational literal",
    )
    comp.add_argument("--trunc", type=int, default=None, help="truncation order (>= max-n)")
    comp.add_argument("--format", choices=["json", "csv"], default="json")
    comp.add_argument("--output", "-o", default=None, help="output path (default: stdout)")

    ver = sub.add_parser(
        "verify",
        help="verify identities",
        epilog="identity names: "
        + ", ".join([i.value for i in IdentityId] + sorted(ALIASES) + ["all"]),
    )
    ver.add_argument("--identity", required=True, help="identity name or 'all'")
    ver.add_argument("--max-n", type=int, default=None, help="largest index, inclusive")
    ver.add_argument("--order", type=int, default=None, help="largest order (r or k), inclusive")
    ver.add_argument("--trunc", type=int, default=None, help="truncation order (>= max-n)")
    ver.add_argument("--profile", choices=["quick", "full"], default="full")
    ver.add_argument("--format", choices=["json", "csv"], default="json")
    ver.add_argument("--timings", action="store_true", help="include wall-clock times")
    ver.add_argument("--output", "-o", default=None, help="output path (default: stdout)")

    sub.add_parser("list-families", help="print the family catalog")
    return parser


# -- compute -----------------------------------------------------------------


def _compute_rows(args: argparse.Namespace) -> tuple[str, list[dict[str, object]]]:
    family = FamilyId(args.family)
    info = CATALOG[family]
    max_n = args.max_n
    argument = (
        Argument.symbolic() if args.x_arg == "symbolic" else Argument.numeric(args.x_arg)
    )
    lam_mode = (
        LambdaMode.symbolic() if args.lam == "symbolic" else LambdaMode.numeric(args.lam)
    )

    if info.kind == "polynomial":
        rows = [{"n": n, "value": central_factorial_power(n)} for n in range(max_n + 1)]
        return "polynomial", rows

    if info.kind == "triangle":
        rows = []
        for n in range(max_n + 1):
            for k in range(n + 1):
                rows.append(
                    {"n": n, "k": k, "value": triangular_numbers(family, n, k, lam_mode)}
                )
        return "triangle", rows

    trunc = args.trunc if args.trunc is not None else max_n
    series = build_egf(FamilySpec(family, args.order, argument, lam_mode), trunc)
    rows = [{"n": n, "value": series.value(n)} for n in range(max_n + 1)]
    return "sequence", rows


def _render_compute(args: argparse.Namespace, kind: str, rows: list[dict[str, object]]) -> str:
    if args.format == "json":
        payload = {
            "family": args.family,
            "kind": kind,
            "order": str(args.order),
            "lambda": "symbolic" if args.lam == "symbolic" else str(args.lam),
            "x": "symbolic" if args.x_arg == "symbolic" else str(args.x_arg),
            "max_n": args.max_n,
            "values": [
                {**{key: row[key] for key in row if key != "value"},
                 "value": row["value"].to_records()}
                for row in rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if kind == "triangle":
        max_n = args.max_n
        writer.writerow(["n"] + [f"k={k}" for k in range(max_n + 1)])
        grid: dict[int, dict[int, BiPoly]] = {}
        for row in rows:
            grid.setdefault(row["n"], {})[row["k"]] = row["value"]
        for n in range(max_n + 1):
            cells = [str(n)] + [
                grid[n][k].render() if k <= n else "" for k in range(max_n + 1)
            ]
            writer.writerow(cells)
    else:
        writer.writerow(["n", "value"])
        for row in rows:
            writer.writerow([row["n"], row["value"].render()])
    return buffer.getvalue()


# -- verify -------------------------------------------------------------------


def _render_reports(
    reports: list[VerificationReport], fmt: str, profile: str | None, timings: bool
) -> str:
    if fmt == "json":
        if len(reports) == 1 and profile is None:
            payload: object = reports[0].to_json_dict(include_timing=timings)
        else:
            payload = {
                "profile": profile,
                "all_pass": all(r.all_pass for r in reports),
                "reports": [r.to_json_dict(include_timing=timings) for r in reports],
            }
        return json.dumps(payload, indent=2) + "\n"

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["identity", "indices", "status", "residual"])
    for report in reports:
        for case in report.cases:
            indices = ";".join(f"{key}={value}" for key, value in case.indices.items())
            writer.writerow(
                [
                    report.identity.value,
                    indices,
                    "pass" if case.passed else "fail",
                    case.residual.render(),
                ]
            )
    return buffer.getvalue()


# -- entry points ---------------------------------------------------------------


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)


def _dispatch(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if args.command == "list-families":
        lines = [f"{'name':<26} {'kind':<11} {'order':<15} {'arg':<4} {'recipe'}"]
        for row in list_families():
            lines.append(
                f"{row['name']:<26} {row['kind']:<11} {row['order']:<15} "
                f"{row['argument']:<4} {row['recipe']}"
            )
        _emit(None, "\n".join(lines) + "\n")
        return 0

    if args.command == "compute":
        if args.max_n < 0:
            parser.error("--max-n must be nonnegative")
        if args.trunc is not None and args.trunc < args.max_n:
            parser.error(f"--trunc {args.trunc} is below --max-n {args.max_n}")
        try:
            kind, rows = _compute_rows(args)
        except (ValueError, ArithmeticError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _emit(args.output, _render_compute(args, kind, rows))
        return 0

    # verify
    if args.identity == "all":
        for flag in ("max_n", "order", "trunc"):
            if getattr(args, flag) is not None:
                parser.error(f"--{flag.replace('_', '-')} applies to a single identity")
        reports = verify_all(args.profile)
        text = _render_reports(reports, args.format, args.profile, args.timings)
        _emit(args.output, text)
        return 0 if all(r.all_pass for r in reports) else 1

    try:
        identity = coerce_identity(args.identity)
    except UnknownIdentity as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    d_max_n, d_order, d_trunc = default_ranges(identity, args.profile)
    max_n = args.max_n if args.max_n is not None else d_max_n
    order = args.order if args.order is not None else d_order
    trunc = args.trunc if args.trunc is not None else max(d_trunc, max_n)
    if max_n < 0:
        parser.error("--max-n must be nonnegative")
    if trunc < max_n:
        parser.error(f"--trunc {trunc} is below --max-n {max_n}")
    try:
        report = verify(identity, max_n, order, trunc)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(args.output, _render_reports([report], args.format, None, args.timings))
    return 0 if report.all_pass else 1


def _emit(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
