"""Command line entry point.

Exit codes: 0 success, 1 verification failure or route disagreement,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import __version__
from .core import fibonomial_product, fibonomial_recurrence, fibonomial_via_bridge
from .hessenberg import det_tha1, det_theorem1
from .identities import bell_det_fibonom, th5_sum
from .report import fmt_value
from .series_cf import ab_inverse_pair, cf_column_variant, cf_eval, cf_row_variant, gf_signed_row
from .verify import SUITE_NAMES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ROUTES: dict[str, Callable[[int, int], int]] = {
    "product": fibonomial_product,
    "recurrence": fibonomial_recurrence,
    "hessenberg": lambda n, k: det_theorem1(n - 1, k) if k else 1,
    "tha1": lambda n, k: det_tha1(n - k, k) if k else 1,
    "bridge": fibonomial_via_bridge,
    "trudi": lambda n, k: th5_sum(n - 1, k) if k else 1,
    "bell": lambda n, k: bell_det_fibonom(n, k) if k else 1,
}


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def cmd_eval(args) -> int:
    n, k = args.n, args.k
    if n < 0 or k < 0 or k > n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")
    names = list(ROUTES) if args.method == "all" else [args.method]
    values = {name: ROUTES[name](n, k) for name in names}
    if len(names) == 1:
        text = f"{values[names[0]]}\n"
    else:
        text = "".join(f"{name:<11} {v}\n" for name, v in values.items())
    _emit(args, {"n": n, "k": k, "values": {name: str(v) for name, v in values.items()}}, text)
    if len(set(values.values())) > 1:
        sys.stderr.write("routes disagree\n")
        return EXIT_FAIL
    return EXIT_OK


def cmd_triangle(args) -> int:
    if args.rows < 1:
        raise UsageError("rows must be >= 1")
    rows = [[fibonomial_product(n, k) for k in range(n + 1)] for n in range(args.rows)]
    text = "".join(" ".join(str(v) for v in row) + "\n" for row in rows)
    _emit(args, {"rows": [[str(v) for v in row] for row in rows]}, text)
    return EXIT_OK


def cmd_cf(args) -> int:
    if args.order < 1:
        raise UsageError("order must be >= 1")
    if args.n < 0:
        raise UsageError("n must be >= 0")
    spec = cf_row_variant(args.n) if args.variant == "row" else cf_column_variant(args.n)
    coeffs = list(cf_eval(spec, args.order).coeffs)
    lines = [f"{args.variant} continued fraction, n={args.n} (valid mod x^{args.n + 2})"]
    for j, lvl in enumerate(spec.levels, start=1):
        lines.append(f"  level {j}: {fmt_value(lvl.num)} x / (1 + {fmt_value(lvl.lin)} x - ...)")
    lines.append("coefficients: " + ", ".join(fmt_value(c) for c in coeffs))
    payload = {
        "variant": args.variant,
        "n": args.n,
        "order": args.order,
        "levels": [{"num": fmt_value(l.num), "lin": fmt_value(l.lin)} for l in spec.levels],
        "coefficients": [fmt_value(c) for c in coeffs],
    }
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_series(args) -> int:
    if args.n < 0:
        raise UsageError("n must be >= 0")
    if args.kind == "row":
        order = args.n if args.order is None else args.order
        coeffs = list(gf_signed_row(args.n, order).coeffs)
    else:
        order = args.n + 1 if args.order is None else args.order
        A, _ = ab_inverse_pair(args.n, order)
        coeffs = [(-1) ** l * c for l, c in enumerate(A.coeffs)]
    _emit(
        args,
        {"kind": args.kind, "n": args.n, "order": order, "coefficients": [str(c) for c in coeffs]},
        ", ".join(str(c) for c in coeffs) + "\n",
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.max_n, max(1, args.jobs))
    if args.report:
        Path(args.report).write_text(report.dumps(), encoding="utf-8")
    if args.format == "json":
        sys.stdout.write(report.dumps())
    else:
        sys.stdout.write(report.text())
    return EXIT_OK if report.ok else EXIT_FAIL


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # shared by the top-level parser and every subcommand, so flags go on either side
    p = argparse.ArgumentParser(add_help=False)
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=["text", "json"], default=d("text"))
    p.add_argument("--max-n", type=int, default=d(None), help="override every suite's parameter range")
    p.add_argument("--jobs", type=int, default=d(1), help="worker processes for verify")
    p.add_argument("--report", default=d(None), help="write the verification report (JSON) here")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibonomials", description=__doc__.splitlines()[0], parents=[_global_flags(False)]
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    flags = [_global_flags(True)]

    p = sub.add_parser("eval", parents=flags, help="compute C(n, k)_F by one or every route")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=[*ROUTES, "all"], default="product")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("triangle", parents=flags, help="print rows 0..ROWS-1 of the triangle")
    p.add_argument("rows", type=int)
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("cf", parents=flags, help="expand a continued fraction")
    p.add_argument("variant", choices=["row", "column"])
    p.add_argument("n", type=int)
    p.add_argument("order", type=int)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("series", parents=flags, help="generating-function coefficients from the golden-ring products")
    p.add_argument("kind", choices=["row", "column"])
    p.add_argument("n", type=int)
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", parents=flags, help="run verification suites")
    p.add_argument("suite", nargs="?", choices=SUITE_NAMES, default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
