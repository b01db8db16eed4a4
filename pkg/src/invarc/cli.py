"""Command-line front end.

Subcommands:

    verify-series   run the derivation pipeline and check every coefficient
                    that has a built-in reference value
    cfrac           expand the true inverse as a continued fraction, with
                    optional tail freezing and closed-form collapse
    error-table     sweep the closed-form error over a lambda grid (TSV)
    invert          recover semiaxes from perimeter and axis-sum

Exit codes: 0 success, 1 usage error, 2 verification or domain failure.
Output uses LF line endings and is byte-identical across runs for a given
invocation; --out writes atomically (temp file in the target directory,
then rename).
"""

from __future__ import annotations

import argparse
import contextlib
import math
import os
import sys
import tempfile
from fractions import Fraction

from .cfrac import (
    CFracError,
    NotInRamanujanShape,
    cfrac_expand,
    collapse_to_closed_form,
    freeze_tail,
    solve_periodic_tail,
)
from .derivation import full_report, true_inverse_series
from .numeric import (
    DEFAULT_CONFIG,
    ERROR_TABLE_COLUMNS,
    NumericError,
    PrecisionConfig,
    error_sweep,
    invert_from_measurements,
    lambda_of,
)
from .reference import CFRAC_PARTIALS, REFERENCE_SERIES
from .series import SeriesError


class UsageError(Exception):
    """Bad arguments; mapped to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); route through run()
        raise UsageError(message)


def _positive_int(floor: int):
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if value < floor:
            raise argparse.ArgumentTypeError(f"must be at least {floor}, got {value}")
        return value

    return parse


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="invarc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-series", help="derive and check the series pipeline")
    p.add_argument("--order", type=_positive_int(8), default=12,
                   help="working truncation order (default 12, minimum 8)")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.add_argument("--out", help="write output to this file atomically")

    p = sub.add_parser("cfrac", help="continued-fraction view of the true inverse")
    p.add_argument("--depth", type=_positive_int(1), default=5,
                   help="number of partial numerators to extract (default 5)")
    p.add_argument("--freeze", type=_fraction, default=None, metavar="P/Q",
                   help="freeze the tail at this value and solve it in closed form")
    p.add_argument("--freeze-from", type=_positive_int(1), default=2, metavar="K",
                   help="1-based index the freeze starts at (default 2)")
    p.add_argument("--out", help="write output to this file atomically")

    p = sub.add_parser("error-table", help="TSV error sweep over a lambda grid")
    p.add_argument("--lambda-min", type=float, default=0.0)
    p.add_argument("--lambda-max", type=float, default=0.2)
    p.add_argument("--steps", type=_positive_int(1), default=20,
                   help="number of grid intervals; the table has steps+1 rows")
    p.add_argument("--abs-tol", type=float, default=DEFAULT_CONFIG.abs_tol)
    p.add_argument("--out", help="write output to this file atomically")

    p = sub.add_parser("invert", help="semiaxes from perimeter and axis-sum")
    p.add_argument("--perimeter", type=float, required=True)
    p.add_argument("--sum", type=float, required=True, dest="axis_sum",
                   help="a + b, the axis sum the shape parameter is relative to")

    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    target = os.path.abspath(out)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".invarc-")
    try:
        with os.fdopen(fd, "w", newline="\n") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp)
        raise


def _cmd_verify_series(args) -> tuple[str, int]:
    report = full_report(args.order)
    rows = []
    mismatches = []
    checked = 0
    for name, power, coeff in report.coefficient_rows():
        reference = REFERENCE_SERIES[name]
        if power in reference:
            checked += 1
            if coeff == reference[power]:
                status = "reference"
            else:
                status = f"mismatch(expected {reference[power]})"
                mismatches.append((name, power, coeff, reference[power]))
        else:
            status = "derived"
        rows.append((name, power, coeff, status))
    for index, coeff in enumerate(report.cfrac_true.partials, start=1):
        if index <= len(CFRAC_PARTIALS):
            checked += 1
            expected = CFRAC_PARTIALS[index - 1]
            if coeff == expected:
                status = "reference"
            else:
                status = f"mismatch(expected {expected})"
                mismatches.append(("cfrac-partials", index, coeff, expected))
        else:
            status = "derived"
        rows.append(("cfrac-partials", index, coeff, status))

    if args.format == "tsv":
        lines = ["series\tpower\tcoefficient\tstatus"]
        lines.extend(f"{n}\t{p}\t{c}\t{s}" for n, p, c, s in rows)
        text = "\n".join(lines) + "\n"
    else:
        lines = [report.to_text().rstrip("\n")]
        for name, power, coeff, expected in mismatches:
            lines.append(
                f"MISMATCH {name} [{power}]: computed {coeff}, reference {expected}"
            )
        if mismatches:
            lines.append(f"reference check: {len(mismatches)} of {checked} mismatch")
        else:
            lines.append(f"reference check: {checked} coefficients match")
        text = "\n".join(lines) + "\n"
    return text, 2 if mismatches else 0


def _cmd_cfrac(args) -> tuple[str, int]:
    source = true_inverse_series(args.depth + 2)
    cf = cfrac_expand(source, args.depth)
    lines = [
        f"source: true inverse series through x^{args.depth + 2}",
        f"leading coefficient: {cf.leading}",
        f"head numerator coefficient: {cf.head}",
        "partial numerators: " + ", ".join(cf.partial_strings()),
    ]
    if args.freeze is not None:
        frozen = freeze_tail(cf, args.freeze_from, args.freeze)
        lines.append(
            f"frozen from a_{args.freeze_from}: "
            + ", ".join(frozen.partial_strings())
            + " (periodic)"
        )
        tail = solve_periodic_tail(args.freeze)
        lines.append(f"tail closed form: {tail}")
        try:
            closed = collapse_to_closed_form(frozen)
        except NotInRamanujanShape as exc:
            lines.append(f"closed form: none ({exc})")
        else:
            lines.append(f"closed form: {closed.canonical_string()}")
    return "\n".join(lines) + "\n", 0


def _band_violations(rows) -> list[str]:
    # |normalized + 1| stays within 0.02 out to lambda = 0.05 and within
    # 0.15 out to lambda = 0.2; the lambda = 0 limit row is exactly -1.
    messages = []
    for row in rows:
        for bound, tol in ((0.05, 0.02), (0.2, 0.15)):
            if 0.0 < row.lam <= bound and abs(row.normalized + 1.0) > tol:
                messages.append(
                    f"lambda {row.lam:.17g}: |normalized + 1| = "
                    f"{abs(row.normalized + 1.0):.17g} exceeds {tol} "
                    f"(band up to lambda = {bound})"
                )
    return messages


def _cmd_error_table(args) -> tuple[str, int]:
    if not (0.0 <= args.lambda_min <= args.lambda_max < 1.0):
        raise UsageError(
            f"need 0 <= lambda-min <= lambda-max < 1, got "
            f"{args.lambda_min} and {args.lambda_max}"
        )
    cfg = PrecisionConfig(abs_tol=args.abs_tol)
    span = args.lambda_max - args.lambda_min
    grid = [args.lambda_min + span * i / args.steps for i in range(args.steps + 1)]
    rows = error_sweep(grid, cfg)
    lines = ["\t".join(ERROR_TABLE_COLUMNS)]
    for row in rows:
        lines.append("\t".join(f"{value:.17g}" for value in row.as_tuple()))
    text = "\n".join(lines) + "\n"
    violations = _band_violations(rows)
    for message in violations:
        print(f"band check failed: {message}", file=sys.stderr)
    return text, 2 if violations else 0


def _cmd_invert(args) -> tuple[str, int]:
    ellipse = invert_from_measurements(args.perimeter, args.axis_sum)
    h = max(0.0, args.perimeter / (math.pi * args.axis_sum) - 1.0)
    lines = [
        f"a: {ellipse.a:.17g}",
        f"b: {ellipse.b:.17g}",
        f"lambda: {lambda_of(ellipse):.17g}",
        f"h: {h:.17g}",
    ]
    return "\n".join(lines) + "\n", 0


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    handlers = {
        "verify-series": _cmd_verify_series,
        "cfrac": _cmd_cfrac,
        "error-table": _cmd_error_table,
        "invert": _cmd_invert,
    }
    try:
        text, code = handlers[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (NumericError, CFracError, SeriesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(text, getattr(args, "out", None))
    return code
