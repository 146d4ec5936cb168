"""Command line interface: ``leafkernel eval|table|constants|verify``.

Exit status: 0 success, 1 a verification check failed, 2 usage error.
"""

import argparse
import csv
import io
import json
import math
import sys

from .core import arcsleaf, cleaf, sleaf
from .errors import LeafError
from .numerics import period_constants
from .verification import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

FUNCTIONS = {
    "sleaf": lambda n, x: sleaf(n, x).r,
    "cleaf": lambda n, x: cleaf(n, x).r,
    "arcsleaf": arcsleaf,
}


def fmt(value, precision):
    text = f"{value:.{precision}f}"
    # "-0.000000" -> "0.000000"
    if text.startswith("-") and float(text) == 0.0:
        text = text[1:]
    return text


def _label(x):
    """Short, stable rendering of a grid abscissa (2.4 rather than 2.4000000000000004)."""
    return repr(round(x, 10) + 0.0)


def _precision(text):
    value = int(text)
    if not 1 <= value <= 17:
        raise argparse.ArgumentTypeError(f"precision must be in [1, 17], got {value}")
    return value


def _order(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"n must be >= 1, got {value}")
    return value


def render(rows, columns, fmt_name, precision):
    """Format a list of dict rows; floats are printed with ``precision`` decimals."""

    def cell(v):
        return fmt(v, precision) if isinstance(v, float) else str(v)

    if fmt_name == "json":
        out = [
            {k: (float(fmt(v, precision)) if isinstance(v, float) else v) for k, v in row.items()}
            for row in rows
        ]
        return json.dumps(out, indent=2) + "\n"
    if fmt_name == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([cell(row[c]) for c in columns])
        return buf.getvalue()
    cells = [[cell(row[c]) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def table_rows(n, start, end, step):
    count = math.floor((end - start) / step + 1e-9) + 1
    rows = []
    for i in range(count):
        l = start + i * step
        rows.append({"l": _label(l), "sleaf": sleaf(n, l).r, "cleaf": cleaf(n, l).r})
    return rows


def cmd_eval(args):
    value = FUNCTIONS[args.fn](args.n, args.value)
    if args.format == "pretty":
        return fmt(value, args.precision) + "\n", EXIT_OK
    row = {"n": args.n, "fn": args.fn, "input": args.value, "value": value}
    if args.format == "json":
        row["value"] = float(fmt(value, args.precision))
        return json.dumps(row) + "\n", EXIT_OK
    row["input"] = _label(args.value)
    return render([row], ["n", "fn", "input", "value"], "csv", args.precision), EXIT_OK


def cmd_table(args):
    rows = table_rows(args.n, args.start, args.end, args.step)
    if args.format == "json":
        for row in rows:
            row["l"] = float(row["l"])
    return render(rows, ["l", "sleaf", "cleaf"], args.format, args.precision), EXIT_OK


def cmd_constants(args):
    rows = []
    for n in (1, 2, 3):
        c = period_constants(n)
        rows.append({"n": n, "half_pi_n": c.half_pi_n, "pi_n": c.pi_n, "period": c.period})
    if args.format == "pretty":
        lines = []
        for row in rows:
            n = row["n"]
            lines.append(f"pi_{n}/2 = {fmt(row['half_pi_n'], args.precision)}")
            lines.append(f"pi_{n} = {fmt(row['pi_n'], args.precision)}")
            lines.append(f"period({n}) = {fmt(row['period'], args.precision)}")
        return "\n".join(lines) + "\n", EXIT_OK
    return render(rows, ["n", "half_pi_n", "pi_n", "period"], args.format, args.precision), EXIT_OK


def cmd_verify(args):
    results = run_suite(args.suite)
    ok = all(r.passed for checks in results.values() for r in checks)
    if args.format == "json":
        payload = {
            "passed": ok,
            "suites": {
                suite: [
                    {"name": r.name, "residual": r.residual, "tolerance": r.tolerance, "passed": r.passed}
                    for r in checks
                ]
                for suite, checks in results.items()
            },
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "check", "residual", "tolerance", "passed"])
        for suite, checks in results.items():
            for r in checks:
                writer.writerow([suite, r.name, repr(r.residual), repr(r.tolerance), r.passed])
        text = buf.getvalue()
    else:
        lines = []
        for suite, checks in results.items():
            lines.append(f"== {suite} ==")
            lines.extend(r.line() for r in checks)
        lines.append("ALL PASSED" if ok else "FAILURES PRESENT")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_FAILED


def build_parser():
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")
    output.add_argument("--precision", type=_precision, default=6, help="decimal digits (1-17)")
    output.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")

    parser = argparse.ArgumentParser(
        prog="leafkernel", description="Leaf functions sleaf_n / cleaf_n and their identities."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[output], help="evaluate one function value")
    p.add_argument("--n", type=_order, default=3)
    p.add_argument("--fn", choices=sorted(FUNCTIONS), default="sleaf")
    p.add_argument("value", type=float)
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("table", parents=[output], help="tabulate sleaf_n and cleaf_n")
    p.add_argument("--n", type=_order, default=3)
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--end", type=float, default=4.1)
    p.add_argument("--step", type=float, default=0.1)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("constants", parents=[output], help="print pi_n and periods for n = 1, 2, 3")
    p.set_defaults(handler=cmd_constants)

    p = sub.add_parser("verify", parents=[output], help="run verification suites")
    p.add_argument("suite", nargs="?", choices=[*SUITES, "all"], default="all")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        if not args.step > 0:
            parser.error(f"--step must be positive, got {args.step}")
        if args.end < args.start:
            parser.error(f"--end ({args.end}) must not be below --start ({args.start})")
    try:
        text, status = args.handler(args)
    except LeafError as exc:
        print(f"leafkernel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
