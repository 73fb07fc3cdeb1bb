"""Command-line front end: regenerate tables and figure data, run the audit."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import published as pub
from .matrix_elements import PotentialTerm, power_W
from .secular_solver import MIN_ENERGY, assemble, solve_fixed_reference, solve_self_consistent
from .sturmians import BasisSpec, normalization_N, sturmian_eval

FLOAT_FMT = "%.12g"


@dataclass(frozen=True)
class RunConfig:
    command: str
    output_format: str = "csv"
    output_path: str | None = None
    bracket: tuple = (MIN_ENERGY, 2.0)
    points: int | None = None


# -- serialization ----------------------------------------------------------


def _scalar(v):
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (complex, np.complexfloating)):
        v = complex(v)
        if v.imag == 0:
            return float(FLOAT_FMT % v.real)
        return f"{FLOAT_FMT % v.real}{'+' if v.imag >= 0 else '-'}{FLOAT_FMT % abs(v.imag)}j"
    if isinstance(v, (float, np.floating)):
        v = float(v)
        return v if not math.isfinite(v) else float(FLOAT_FMT % v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    return v


def _csv_cell(v) -> str:
    if isinstance(v, (list, tuple, np.ndarray)):
        return ";".join(_csv_cell(x) for x in v)
    v = _scalar(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return FLOAT_FMT % v
    return str(v)


def _json_value(v):
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_json_value(x) for x in v]
    v = _scalar(v)
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def render(rows: list[dict], fmt: str) -> str:
    columns = list(rows[0].keys()) if rows else []
    if fmt == "json":
        data = [{c: _json_value(r[c]) for c in columns} for r in rows]
        return json.dumps(data, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_csv_cell(r[c]) for c in columns])
    return buf.getvalue()


# -- datasets ---------------------------------------------------------------


def cmd_table1(args) -> list[dict]:
    rows = []
    for n in range(10):
        closed = normalization_N(1.0, n)
        quad = 0.5 * power_W(BasisSpec(1.0, (n,)), 2)[0, 0]
        printed = pub.NORMALIZATION[n]
        rows.append({
            "n": n,
            "closed_form": closed,
            "quadrature": quad,
            "printed": printed,
            "match": abs(printed - closed) <= 1e-12 * closed,
        })
    return rows


def _delta(value, printed):
    return value - float(printed) if printed is not None else math.nan


def cmd_table2(args) -> list[dict]:
    from .models.anharmonic import anharmonic_table

    kw = dict(bracket=args.bracket, scan_points=args.points or 400)
    cubic = anharmonic_table("cubic", args.alpha, pub.TABLE2_N, **kw)
    quartic = anharmonic_table("quartic", args.alpha, pub.TABLE2_N, **kw)
    rows = []
    for i, N in enumerate(pub.TABLE2_N):
        rows.append({
            "N": N,
            "cubic": cubic[i]["ground"],
            "cubic_printed": float(pub.TABLE2_CUBIC[i]),
            "cubic_delta": _delta(cubic[i]["ground"], pub.TABLE2_CUBIC[i]),
            "cubic_roots": cubic[i]["roots"],
            "quartic": quartic[i]["ground"],
            "quartic_printed": float(pub.TABLE2_QUARTIC[i]),
            "quartic_delta": _delta(quartic[i]["ground"], pub.TABLE2_QUARTIC[i]),
            "quartic_roots": quartic[i]["roots"],
        })
    return rows


def cmd_table3(args) -> list[dict]:
    from .models.anharmonic import quartic_excited_fixed, quartic_excited_secular

    rows = []
    for n in range(5):
        e1 = quartic_excited_fixed(n, 1, args.alpha, args.mass, args.omega)
        e2 = quartic_excited_fixed(n, 2, args.alpha, args.mass, args.omega)
        ref = float(pub.TABLE3_REFERENCE[n])
        rows.append({
            "n": n,
            "N1": e1,
            "N2": e2,
            "N2_full_secular": quartic_excited_secular(n, args.alpha, args.mass, args.omega),
            "reference": ref,
            "diff_N1": ref - e1,
            "diff_N2": ref - e2,
            "printed_N1": float(pub.TABLE3_N1[n]),
            "printed_N2": float(pub.TABLE3_N2[n]),
            "printed_diff_N1": float(pub.TABLE3_DIFF_N1[n]),
            "printed_diff_N2": float(pub.TABLE3_DIFF_N2[n]),
        })
    return rows


def cmd_table4(args) -> list[dict]:
    from .models.anharmonic import anharmonic_table

    kw = dict(bracket=args.bracket, scan_points=args.points or 400, damped=True)
    cubic = anharmonic_table("cubic", args.alpha, pub.TABLE4_N, **kw)
    quartic = anharmonic_table("quartic", args.alpha, pub.TABLE4_N, **kw)
    rows = []
    for i, N in enumerate(pub.TABLE4_N):
        rows.append({
            "N": N,
            "cubic": cubic[i]["ground"],
            "cubic_printed": float(pub.TABLE4_CUBIC[i]),
            "cubic_delta": _delta(cubic[i]["ground"], pub.TABLE4_CUBIC[i]),
            "quartic": quartic[i]["ground"],
            "quartic_printed": float(pub.TABLE4_QUARTIC[i]),
            "quartic_delta": _delta(quartic[i]["ground"], pub.TABLE4_QUARTIC[i]),
        })
    return rows


def figure1_rows(energy: float = 1.0, points: int = 801, n_max: int = 9) -> list[dict]:
    x = np.linspace(-20.0, 20.0, points)
    cols = {f"psi{n}": sturmian_eval(energy, n, x) for n in range(n_max + 1)}
    return [{"x": x[i], **{k: v[i] for k, v in cols.items()}} for i in range(points)]


def figure2_rows(gamma: float = 1.0, energy: float = 1.0, points: int = 200) -> list[dict]:
    from .models.damped import damped_field

    x = np.linspace(0.0, 5.0, points)
    t = np.linspace(0.0, 10.0, points)
    re, im = damped_field(gamma, energy, x, t)
    return [
        {"x": x[j], "t": t[i], "re": re[i, j], "im": im[i, j]}
        for i in range(len(t))
        for j in range(len(x))
    ]


def cmd_figures(args) -> list[dict]:
    energy = 1.0 if args.energy is None else args.energy
    if args.figure == 1:
        return figure1_rows(energy, args.points or 801)
    return figure2_rows(args.gamma, energy, args.points or 200)


def cmd_errata(args) -> list[dict]:
    from .errata import errata_report

    return [e.as_dict() for e in errata_report()]


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def cmd_basis(args) -> list[dict]:
    energy = 1.0 if args.energy is None else args.energy
    idx = _int_list(args.n)
    x = np.linspace(args.xmin, args.xmax, args.points or 101)
    cols = {f"psi{n}": sturmian_eval(energy, n, x) for n in idx}
    return [{"x": x[i], **{k: v[i] for k, v in cols.items()}} for i in range(len(x))]


def parse_term(text: str) -> PotentialTerm:
    """KIND:K:COEFF, e.g. power:4:0.1 or gaussian:3:1."""
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"term must look like KIND:K:COEFF, got {text!r}")
    kind, k, coeff = parts
    try:
        return PotentialTerm(kind, int(k), float(coeff))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def cmd_solve(args) -> list[dict]:
    terms = args.term or []
    indices = tuple(range(args.size))
    if args.mode == "fixed":
        energy = 1.0 if args.energy is None else args.energy
        res = solve_fixed_reference(assemble(BasisSpec(energy, indices), terms))
    else:
        res = solve_self_consistent(indices, terms, bracket=args.bracket, scan_points=args.points or 400)
    residuals = res.diagnostics.get("residuals", [])
    return [
        {"index": i, "energy": float(e), "residual": float(residuals[i]) if i < len(residuals) else math.nan}
        for i, e in enumerate(res.energies)
    ]


# -- argument parsing -------------------------------------------------------


def _bracket(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bracket must be LO,HI, got {text!r}") from None
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv", dest="output_format")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--points", type=int, default=None, help="scan points or grid samples")
    common.add_argument("--bracket", type=_bracket, default=(MIN_ENERGY, 2.0), help="LO,HI energy search window")
    common.add_argument("--energy", type=float, default=None, help="Sturmian energy E")

    parser = argparse.ArgumentParser(prog="sturmian", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table1", parents=[common], help="normalization constants")
    p = sub.add_parser("table2", parents=[common], help="cubic and quartic ground states")
    p.add_argument("--alpha", type=float, default=0.1)
    p = sub.add_parser("table3", parents=[common], help="quartic excited states")
    p.add_argument("--alpha", type=float, default=0.1)
    p.add_argument("--mass", type=float, default=0.5)
    p.add_argument("--omega", type=float, default=2.0)
    p = sub.add_parser("table4", parents=[common], help="Gaussian-damped ground states")
    p.add_argument("--alpha", type=float, default=1.0)
    p = sub.add_parser("figures", parents=[common], help="figure datasets")
    p.add_argument("--figure", type=int, choices=(1, 2), default=1)
    p.add_argument("--gamma", type=float, default=1.0)
    sub.add_parser("errata", parents=[common], help="audit of printed values")
    p = sub.add_parser("basis", parents=[common], help="evaluate Sturmians on a grid")
    p.add_argument("--n", default="0", help="comma-separated indices")
    p.add_argument("--xmin", type=float, default=-5.0)
    p.add_argument("--xmax", type=float, default=5.0)
    p = sub.add_parser("solve", parents=[common], help="secular problem for a custom V'")
    p.add_argument("--term", type=parse_term, action="append", help="KIND:K:COEFF, repeatable")
    p.add_argument("--size", type=int, default=1, help="number of Sturmians")
    p.add_argument("--mode", choices=("fixed", "self_consistent"), default="self_consistent")
    return parser


COMMANDS = {
    "table1": cmd_table1,
    "table2": cmd_table2,
    "table3": cmd_table3,
    "table4": cmd_table4,
    "figures": cmd_figures,
    "errata": cmd_errata,
    "basis": cmd_basis,
    "solve": cmd_solve,
}


def run(argv=None) -> str:
    args = build_parser().parse_args(argv)
    rows = COMMANDS[args.command](args)
    return render(rows, args.output_format), args


def main(argv=None) -> int:
    try:
        text, args = run(argv)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
