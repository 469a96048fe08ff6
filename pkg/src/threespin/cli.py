"""Command-line front end.

    threespin spectrum --J 1 --h 0 --k 0
    threespin thermal --h -0.5 --k 0.5 --T 0.2
    threespin sweep --k 0.5 --h-min -3 --h-max 3 --h-steps 121 --T-min 0.01 --T-max 2 --T-steps 50
    threespin dip --k-min 0 --k-max 3 --k-steps 301 --pair 13
    threespin phase --k 1.5
    threespin verify --trials 200 --seed 42

CSV output starts with a header line, followed by ``#`` comment lines that
echo every parameter, then the data rows. JSON output is an array of row
objects with the same field names.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any, Sequence

import numpy as np

from . import analysis
from .errors import ThreeSpinError
from .linalg import eigh_symmetric
from .model import PAIRS, ModelParams, analytic_spectrum, build_hamiltonian
from .thermal import thermal_concurrence
from .verify import run_all

SUBCOMMANDS = ("spectrum", "thermal", "sweep", "dip", "phase", "verify")


def fmt(value: Any) -> str:
    """9 significant digits, locale independent, no negative zero."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        if value == 0:
            return "0"
        return format(float(value), ".9g")
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        if not math.isfinite(value):
            return None
        return 0.0 if value == 0 else float(format(float(value), ".9g"))
    return value


def render(fields: Sequence[str], rows: list[Sequence[Any]], fmt_name: str, echo: dict) -> str:
    if fmt_name == "json":
        objs = [{f: _json_value(v) for f, v in zip(fields, row)} for row in rows]
        return json.dumps(objs, indent=1) + "\n"
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for key, value in echo.items():
        out.write(f"# {key} = {fmt(value)}\n")
    writer.writerows([fmt(v) for v in row] for row in rows)
    return out.getvalue()


def _levels(levels) -> str:
    return ";".join(str(i) for i in levels)


def cmd_spectrum(args) -> tuple[list[str], list[tuple], int]:
    p = ModelParams(args.J, args.h, args.k)
    H = build_hamiltonian(p)
    numeric = eigh_symmetric(H).values
    fields = ["i", "energy", "c13", "c12", "c23", "numeric", "agree"]
    if p.J == 0:
        rows = [(i + 1, None, None, None, None, float(numeric[i]), None) for i in range(8)]
        return fields, rows, 0
    spec = analytic_spectrum(p)
    ranks = np.argsort(spec.energies, kind="stable")
    matched = np.empty(8)
    matched[ranks] = numeric
    tol = 1e-10 * max(1.0, float(np.max(np.abs(H))))
    rows = []
    status = 0
    for lev, num in zip(spec.levels, matched):
        agree = bool(abs(lev.energy - num) <= tol)
        status |= 0 if agree else 1
        rows.append((lev.index, lev.energy, lev.c13, lev.c12, lev.c23, float(num), agree))
    return fields, rows, status


def cmd_thermal(args):
    p = ModelParams(args.J, args.h, args.k)
    tp = thermal_concurrence(p, args.T, args.pair)
    fields = ["J", "h", "k", "T", "pair", "u", "v", "w", "y", "Z", "c_closed", "c_numeric", "concurrence"]
    x = tp.xstate
    weights = (x.u, x.v, x.w, x.y, x.Z) if x is not None else (None,) * 5
    row = (p.J, p.h, p.k, args.T, args.pair, *weights, tp.closed_form, tp.numeric, tp.concurrence)
    return fields, [row], 0


def cmd_sweep(args):
    rows = analysis.sweep(
        args.J, args.k, args.pair,
        (args.h_min, args.h_max, args.h_steps),
        (args.T_min, args.T_max, args.T_steps),
    )
    return ["h", "T", "C"], rows, 0


def cmd_dip(args):
    rows = analysis.dip_curve((args.k_min, args.k_max, args.k_steps), args.J, args.pair)
    return ["k", "h_dip", "c_dip", "c_plus", "c_minus"], rows, 0


def cmd_phase(args):
    segs = analysis.ground_segments(args.J, args.k, (args.h_min, args.h_max))
    rows = [(s.h_lo, s.h_hi, _levels(s.ground_levels), s.pair_c13) for s in segs]
    return ["h_lo", "h_hi", "levels", "c13"], rows, 0


def cmd_verify(args):
    results = run_all(args.trials, args.seed)
    rows = [(r.name, "PASS" if r.passed else "FAIL", r.detail) for r in results]
    failed = [r for r in results if not r.passed]
    for r in failed:
        print(f"FAILED: {r.name}: {r.detail}", file=sys.stderr)
    return ["check", "status", "detail"], rows, 1 if failed else 0


COMMANDS = {
    "spectrum": cmd_spectrum,
    "thermal": cmd_thermal,
    "sweep": cmd_sweep,
    "dip": cmd_dip,
    "phase": cmd_phase,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--J", type=float, default=1.0, help="nearest-neighbour coupling (default 1)")
    common.add_argument("--h", type=float, default=0.0, help="magnetic field")
    common.add_argument("--k", type=float, default=0.0, help="three-spin interaction")
    common.add_argument("--T", type=float, default=0.1, help="temperature, k_B = 1")
    common.add_argument("--pair", type=int, choices=PAIRS, default=13)
    common.add_argument("--h-min", dest="h_min", type=float, default=None)
    common.add_argument("--h-max", dest="h_max", type=float, default=None)
    common.add_argument("--h-steps", dest="h_steps", type=int, default=121)
    common.add_argument("--T-min", dest="T_min", type=float, default=0.01)
    common.add_argument("--T-max", dest="T_max", type=float, default=2.0)
    common.add_argument("--T-steps", dest="T_steps", type=int, default=50)
    common.add_argument("--k-min", dest="k_min", type=float, default=0.0)
    common.add_argument("--k-max", dest="k_max", type=float, default=3.0)
    common.add_argument("--k-steps", dest="k_steps", type=int, default=301)
    common.add_argument("--out", default="-", help="output file, '-' for stdout")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--seed", type=int, default=42)

    parser = argparse.ArgumentParser(prog="threespin", description=__doc__.split("\n")[0], allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SUBCOMMANDS:
        sub.add_parser(name, parents=[common], allow_abbrev=False)
    return parser


def _validate(parser: argparse.ArgumentParser, args) -> None:
    def check_grid(label, lo, hi, steps):
        if steps < 2:
            parser.error(f"--{label}-steps must be >= 2")
        if lo is not None and hi is not None and not lo < hi:
            parser.error(f"--{label}-min must be < --{label}-max")

    for name in ("J", "h", "k", "T"):
        if not math.isfinite(getattr(args, name)):
            parser.error(f"--{name} must be finite")
    if args.command == "sweep":
        if args.h_min is None:
            args.h_min = -3.0
        if args.h_max is None:
            args.h_max = 3.0
        check_grid("h", args.h_min, args.h_max, args.h_steps)
        check_grid("T", args.T_min, args.T_max, args.T_steps)
        if args.T_min <= 0:
            parser.error("--T-min must be > 0")
    if args.command == "phase":
        args.h_min = -math.inf if args.h_min is None else args.h_min
        args.h_max = math.inf if args.h_max is None else args.h_max
        check_grid("h", args.h_min, args.h_max, 2)
    if args.command == "dip":
        check_grid("k", args.k_min, args.k_max, args.k_steps)
    if args.command == "thermal" and args.T <= 0:
        parser.error("--T must be > 0")
    if args.command in ("dip", "phase") and args.J == 0:
        parser.error(f"{args.command} needs --J != 0")
    if args.command == "verify" and args.trials < 1:
        parser.error("--trials must be >= 1")


def _echo(args) -> dict:
    keys = {
        "spectrum": ("J", "h", "k"),
        "thermal": ("J", "h", "k", "T", "pair"),
        "sweep": ("J", "k", "pair", "h_min", "h_max", "h_steps", "T_min", "T_max", "T_steps"),
        "dip": ("J", "pair", "k_min", "k_max", "k_steps"),
        "phase": ("J", "k", "h_min", "h_max"),
        "verify": ("trials", "seed"),
    }[args.command]
    return {"command": args.command, **{key: getattr(args, key) for key in keys}}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        fields, rows, status = COMMANDS[args.command](args)
    except ThreeSpinError as exc:
        print(f"threespin {args.command}: {exc}", file=sys.stderr)
        return 2
    text = render(fields, rows, args.format, _echo(args))
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
