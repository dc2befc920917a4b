"""Command-line interface.

Subcommands:

    psi <n>                        print both capacity bounds for a diamond
    bounds <n>                     full per-region capacity report
    construct <shape> <n>          build the packing (json, ascii, or svg)
    oracle <shape> <n>             exact maximum by branch and bound
    table <class>                  capacity table as CSV
    series                         ratio series CSV (+ figures with --out)
    selftest                       run the invariant sweep

Shapes are ``square`` or ``diamond``; table classes are 10, 11, 12, 00,
01, 02, square-odd, square-even.  The environment variable
DOMINO_ORACLE_BUDGET overrides the exact-search node budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .lattice import DIAMOND, SQUARE, Shape
from .dominoes import to_json
from .bounds import bounds_report, upper_capacity
from .diamonds import build_diamond, diamond_capacity
from .oracle import SearchBudget, exact_max
from .render import ASCII_MODE, SVG_MODE, RenderStyle, render
from .report import series_csv, write_series
from .selfcheck import run_selftest
from .squares import build_square
from .tables import TABLE_IDS, emit_table


def _shape(kind: str, n: int) -> Shape:
    if kind not in (SQUARE, DIAMOND):
        raise SystemExit(f"error: shape must be 'square' or 'diamond', got {kind!r}")
    if n < 0:
        raise SystemExit("error: size must be non-negative")
    return Shape(kind, n)


def _cmd_psi(args) -> int:
    print(f"psi={diamond_capacity(args.n)} psi_bar={upper_capacity(args.n)}")
    return 0


def _cmd_bounds(args) -> int:
    rep = bounds_report(args.n)
    dash = lambda v: "--" if v is None else v
    print(f"n={rep.n} class={rep.label}")
    print(f"core_side={dash(rep.core_side)} core_capacity={dash(rep.core_capacity)}")
    if rep.wedge is not None:
        print(f"wedge_capacity={rep.wedge}")
    else:
        print(f"wedge_inner={dash(rep.wedge_inner)} wedge_staircase={dash(rep.wedge_staircase)}")
    print(f"psi={rep.psi} psi_bar={rep.psi_bar} psi_tilde={rep.psi_tilde}")
    return 0


def _cmd_construct(args) -> int:
    shape = _shape(args.shape, args.n)
    config = build_square(args.n) if shape.kind == SQUARE else build_diamond(args.n)
    if args.format == "json":
        sys.stdout.write(to_json(config))
    else:
        style = RenderStyle(mode=ASCII_MODE if args.format == "ascii" else SVG_MODE)
        sys.stdout.write(render(config, style))
    return 0


def _cmd_oracle(args) -> int:
    shape = _shape(args.shape, args.n)
    budget = SearchBudget.default()
    if args.budget is not None:
        budget = SearchBudget(max_nodes=args.budget, max_seconds=budget.max_seconds)
    if args.time_limit is not None:
        budget = SearchBudget(max_nodes=budget.max_nodes, max_seconds=args.time_limit)
    result = exact_max(shape, budget=budget)
    print(result.proof_line())
    sys.stdout.write(to_json(result.witness))
    return 0


def _cmd_table(args) -> int:
    try:
        sys.stdout.write(emit_table(args.table_class, args.nmax))
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    return 0


def _cmd_series(args) -> int:
    if args.out is None:
        sys.stdout.write(series_csv(args.nmax))
        return 0
    written = write_series(args.nmax, Path(args.out), figures=not args.no_figures)
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_selftest(args) -> int:
    ok = run_selftest(
        construct_max=args.nmax,
        recurrence_max=args.recurrence_max,
        oracle_max=args.oracle_nmax,
    )
    print("selftest:", "ok" if ok else "FAILED")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dominopack",
        description="Maximal arrangements of soft-hull dominoes in squares and diamonds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="capacity bounds for a diamond")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_psi)

    p = sub.add_parser("bounds", help="per-region capacity report for a diamond")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("construct", help="build and print the deterministic packing")
    p.add_argument("shape", choices=(SQUARE, DIAMOND))
    p.add_argument("n", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--ascii", dest="format", action="store_const", const="ascii")
    fmt.add_argument("--svg", dest="format", action="store_const", const="svg")
    p.set_defaults(fn=_cmd_construct, format="ascii")

    p = sub.add_parser("oracle", help="exact maximum packing by branch and bound")
    p.add_argument("shape", choices=(SQUARE, DIAMOND))
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, default=None, help="node budget")
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("table", help="emit a capacity table as CSV")
    p.add_argument("table_class", metavar="class", choices=TABLE_IDS)
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("series", help="capacity ratio series (CSV, figures with --out)")
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--out", default=None, help="CSV path; figures are written alongside")
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(fn=_cmd_series)

    p = sub.add_parser("selftest", help="run the invariant sweep")
    p.add_argument("--nmax", type=int, default=200, help="construction sweep cap")
    p.add_argument("--recurrence-max", type=int, default=300)
    p.add_argument("--oracle-nmax", type=int, default=10)
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
