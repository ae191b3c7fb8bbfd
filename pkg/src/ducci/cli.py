"""Command-line front end.

Subcommands: step, orbit, lenper, basic, preds, coeffs, kernel, graph,
verify {length|kernel|oddsum|preds|coeffs}.  Exit codes: 0 success,
1 verification mismatch (a theorem counterexample), 2 usage error.
All output is deterministic apart from the wall-clock seconds column of
sweeps; sampling fallbacks draw from the single --seed flag.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import coeffs as coeffs_mod
from . import graph as graph_mod
from . import kernel as kernel_mod
from .core import DucciTuple, Modulus, ducci_step
from .dynamics import basic_len_per, len_per, orbit_prefix
from .errors import DucciError
from .predecessors import predecessors, verify_predecessor_theorems

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


def _parse_range(text: str) -> list[int]:
    """``lo:hi`` inclusive, or a single value."""
    if ":" in text:
        lo, hi = text.split(":", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _tuple_arg(args) -> DucciTuple:
    return DucciTuple.from_text(args.tuple, Modulus(args.m))


def cmd_step(args) -> int:
    _emit(ducci_step(_tuple_arg(args)).to_text() + "\n", args.out)
    return EXIT_OK


def cmd_orbit(args) -> int:
    prefix = orbit_prefix(_tuple_arg(args), args.k, cap=args.budget)
    _emit("".join(t.to_text() + "\n" for t in prefix.tuples), args.out)
    return EXIT_OK


def cmd_lenper(args) -> int:
    info = len_per(_tuple_arg(args), step_budget=args.budget)
    _emit(f"len={info.len} per={info.per}\n", args.out)
    return EXIT_OK


def cmd_basic(args) -> int:
    basic = basic_len_per(Modulus(args.m), args.n, step_budget=args.budget)
    _emit(f"L={basic.L} P={basic.P}\n", args.out)
    return EXIT_OK


def cmd_preds(args) -> int:
    ps = predecessors(_tuple_arg(args))
    obj = {
        "target": ps.target.to_text(),
        "count": ps.count,
        "solutions": [y.to_text() for y in ps.solutions],
    }
    if ps.listing_suppressed:
        obj["listing_suppressed"] = True
    _emit(json.dumps(obj) + "\n", args.out)
    return EXIT_OK


def cmd_coeffs(args) -> int:
    modulus = Modulus(args.m)
    mode = coeffs_mod.EXACT if args.exact else coeffs_mod.REDUCED
    lines = ["r,s,value,mode"]
    for r in _parse_range(args.row):
        row = coeffs_mod.coeff_row(modulus, args.n, r, mode=mode)
        for s in range(1, args.n + 1):
            lines.append(f"{r},{s},{row.values[s - 1]},{mode}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_kernel(args) -> int:
    modulus = Modulus(args.m)
    if args.tuple:
        u = DucciTuple.from_text(args.tuple, modulus)
        predicate = kernel_mod.in_kernel_predicate(u)
        oracle = kernel_mod.in_kernel_oracle(u, step_budget=args.budget)
        _emit(f"predicate={str(predicate).lower()} oracle={str(oracle).lower()}\n", args.out)
    else:
        if args.n is None:
            raise ValueError("kernel needs --tuple or --n")
        _emit(f"size={kernel_mod.kernel_size(modulus, args.n)}\n", args.out)
    return EXIT_OK


def cmd_graph(args) -> int:
    modulus = Modulus(args.m)
    if args.component:
        comp = graph_mod.component_of(
            DucciTuple.from_text(args.component, modulus), budget=args.budget
        )
        text = graph_mod.export_dot(comp)
    else:
        if args.n is None:
            raise ValueError("graph needs --component or --n")
        g = graph_mod.build_graph(modulus, args.n, budget=args.budget)
        text = graph_mod.export_dot(g)
    _emit(text, args.out)
    return EXIT_OK


KERNEL_COLUMNS = [
    "m", "l", "m1", "n", "predicted_L", "measured_L", "kernel_formula",
    "kernel_measured", "mismatches", "budget_exceeded", "seconds",
]
PREDS_COLUMNS = ["m", "l", "m1", "n", "checked", "mismatches", "budget_exceeded", "seconds"]
COEFFS_COLUMNS = [
    "m", "l", "m1", "n", "sum_ok", "oracle_ok", "conv_ok", "basic_ok",
    "period_row_ok", "seconds",
]


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    return str(value)


def _emit_rows(columns, rows, fmt: str, out: str | None):
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt(row[c]) for c in columns) for row in rows]
        text = "\n".join(lines) + "\n"
    elif fmt == "json":
        text = "".join(json.dumps({c: row[c] for c in columns}) + "\n" for row in rows)
    else:
        text = "".join(
            " ".join(f"{c}={_fmt(row[c])}" for c in columns) + "\n" for row in rows
        )
    _emit(text, out)


def _sweep_cells(args):
    for m in _parse_range(args.m):
        for n in _parse_range(args.n):
            if args.odd_n and n % 2 == 0:
                continue
            yield Modulus(m), n


def cmd_verify(args) -> int:
    rows = []
    failed = False
    columns = {"preds": PREDS_COLUMNS, "coeffs": COEFFS_COLUMNS}.get(args.law, KERNEL_COLUMNS)
    for modulus, n in _sweep_cells(args):
        t0 = time.perf_counter()
        base = {"m": modulus.m, "l": modulus.l, "m1": modulus.m1, "n": n}
        if args.law == "length":
            report = kernel_mod.verify_length_theorem(modulus, n, step_budget=args.step_budget)
            row = dict(
                base,
                predicted_L=report.predicted_L,
                measured_L=report.measured_L,
                kernel_formula=None,
                kernel_measured=None,
                mismatches=len(report.mismatches),
                budget_exceeded=report.budget_exceeded,
            )
            failed |= not report.ok
        elif args.law == "kernel":
            report = kernel_mod.verify_kernel_theorem(
                modulus, n, budget=args.budget, seed=args.seed, step_budget=args.step_budget
            )
            row = dict(
                base,
                predicted_L=report.predicted_L,
                measured_L=report.measured_L,
                kernel_formula=report.kernel_size_formula,
                kernel_measured=report.kernel_size_measured,
                mismatches=len(report.mismatches),
                budget_exceeded=report.budget_exceeded,
            )
            failed |= not report.ok
        elif args.law == "oddsum":
            report = kernel_mod.verify_odd_sum_length(
                modulus, n, budget=args.budget, seed=args.seed, step_budget=args.step_budget
            )
            row = dict(
                base,
                predicted_L=report.predicted_L,
                measured_L=report.measured_L,
                kernel_formula=None,
                kernel_measured=None,
                mismatches=len(report.mismatches),
                budget_exceeded=report.budget_exceeded,
            )
            failed |= not report.ok
        elif args.law == "preds":
            report = verify_predecessor_theorems(
                modulus, n, budget=args.budget, seed=args.seed
            )
            row = dict(
                base,
                checked=report.checked,
                mismatches=len(report.mismatches),
                budget_exceeded=report.budget_exceeded,
            )
            failed |= not report.ok
        else:  # coeffs
            report = coeffs_mod.verify_suite(modulus, n, seed=args.seed, step_budget=args.step_budget)
            row = dict(
                base,
                sum_ok=report.sum_ok,
                oracle_ok=report.oracle_ok,
                conv_ok=report.conv_ok,
                basic_ok=report.basic_ok,
                period_row_ok=report.period_row_ok,
            )
            failed |= not report.ok
        row["seconds"] = f"{time.perf_counter() - t0:.3f}"
        rows.append(row)
    _emit_rows(columns, rows, args.format, args.out)
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ducci", description="Ducci map dynamics on Z_m^n"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def tuple_cmd(name, help_text, func, with_n=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--m", type=int, required=True, help="modulus")
        if with_n:
            p.add_argument("--n", type=int, required=True, help="tuple length")
        else:
            p.add_argument("--tuple", required=True, help="comma-separated entries, e.g. 3,0,3")
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.set_defaults(func=func)
        return p

    tuple_cmd("step", "apply the map once", cmd_step)

    p = tuple_cmd("orbit", "list the first k orbit elements", cmd_orbit)
    p.add_argument("--k", type=int, default=8, help="number of elements (default 8)")
    p.add_argument("--budget", type=int, default=10**6, help="orbit listing cap")

    p = tuple_cmd("lenper", "pre-period and period of the orbit", cmd_lenper)
    p.add_argument("--budget", type=int, default=10**8, help="step budget")

    p = tuple_cmd("basic", "L and P of the basic orbit (0,...,0,1)", cmd_basic, with_n=True)
    p.add_argument("--budget", type=int, default=10**8, help="step budget")

    tuple_cmd("preds", "predecessors of a tuple as JSON", cmd_preds)

    p = sub.add_parser("coeffs", help="coefficient rows as CSV")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--row", required=True, help="row index r, or an inclusive range lo:hi")
    p.add_argument("--exact", action="store_true", help="exact integers instead of mod m")
    p.add_argument("--out")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("kernel", help="cycle-subgroup size, or membership of one tuple")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--tuple")
    p.add_argument("--budget", type=int, default=10**8, help="step budget")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("graph", help="DOT export of the transition graph")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, help="full-space export (requires m^n within budget)")
    p.add_argument("--component", help="export only the component of this tuple")
    p.add_argument("--budget", type=int, default=graph_mod.DEFAULT_GRAPH_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", help="sweep a theorem over a grid of (m, n)")
    p.add_argument("law", choices=["length", "kernel", "oddsum", "preds", "coeffs"])
    p.add_argument("--m", required=True, help="modulus or inclusive range lo:hi")
    p.add_argument("--n", required=True, help="length or inclusive range lo:hi")
    p.add_argument("--odd-n", action="store_true", help="keep only odd n from the range")
    p.add_argument("--budget", type=int, default=kernel_mod.DEFAULT_SWEEP_BUDGET,
                   help="exhaustive-scan tuple cap")
    p.add_argument("--step-budget", type=int, default=10**8)
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.add_argument("--format", choices=["csv", "json", "text"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (DucciError, ValueError, OSError) as exc:
        print(f"ducci: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
