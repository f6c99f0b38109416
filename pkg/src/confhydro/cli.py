"""Command-line front end: evaluate, verify, and export tables and curves.

Every command supports ``--format {csv,json}`` and ``--output PATH``.
CSV output has a single header row, LF line endings, and floats rendered
as %.12e; JSON output is a single top-level object carrying
``schema_version``.  Exit codes: 0 success, 1 usage or invalid input,
2 verification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

import numpy as np

from .hydrogen import (
    ModelParams,
    QuantumNumbers,
    energy_level,
    full_wavefunction,
    probability_density_radial,
    radial_wavefunction,
)
from .reference import PSI_CLOSED_FORMS, RADIAL_CLOSED_FORMS
from .verification import run_verification, tilt_perturbation

DEFAULT_ALPHAS = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return "%.12e" % float(v)
    return str(v)


def _emit(command: str, columns, rows, fmt: str, output: Optional[str]) -> None:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(v) for v in row) for row in rows)
        text = "\n".join(lines) + "\n"
    else:
        payload = {
            "schema_version": 1,
            "command": command,
            "columns": list(columns),
            "rows": [
                [
                    float(_fmt(v))
                    if isinstance(v, (float, np.floating)) and not isinstance(v, bool)
                    else (int(v) if isinstance(v, (int, np.integer)) else v)
                    for v in row
                ]
                for row in rows
            ],
        }
        text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if output:
        with open(output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--output", default=None, help="write to file instead of stdout")
    p.add_argument(
        "--r-b",
        type=float,
        default=None,
        help="alpha-Bohr radius for physical mode (default: natural units, 1)",
    )


def _params(alpha: float, args) -> ModelParams:
    if getattr(args, "r_b", None) is not None:
        return ModelParams.physical(alpha, args.r_b)
    return ModelParams.natural(alpha)


def cmd_energy(args) -> int:
    if not args.alpha_list:
        raise _UsageError("alpha list must not be empty")
    rows = []
    for alpha in args.alpha_list:
        for n in range(1, args.n_max + 1):
            rows.append([alpha, n, energy_level(n, alpha)])
    _emit("energy", ["alpha", "n", "energy_eV"], rows, args.format, args.output)
    return 0


def cmd_density(args) -> int:
    if not args.alpha_list:
        raise _UsageError("alpha list must not be empty")
    qn = QuantumNumbers(args.n, args.l)
    grid = np.linspace(0.0, args.r_max, args.points + 1)[1:]
    rows = []
    for alpha in args.alpha_list:
        curve = probability_density_radial(qn, _params(alpha, args), grid)
        for r, d in zip(curve.r, curve.values):
            rows.append([alpha, args.n, args.l, float(r), float(d)])
    _emit(
        "density", ["alpha", "n", "l", "r", "density"], rows, args.format, args.output
    )
    return 0


_TABLE_GRID = np.linspace(0.2, 15.0, 50)


def cmd_table(args) -> int:
    rows = []
    columns = [
        "which",
        "alpha",
        "n",
        "l",
        "m_l",
        "r",
        "general_re",
        "general_im",
        "closed_re",
        "closed_im",
        "abs_deviation",
        "state_max_deviation",
    ]
    for alpha in args.alpha_list:
        params = _params(alpha, args)
        # fixed angles with theta^alpha, phi^alpha inside the classical ranges
        theta = 1.1 ** (1.0 / alpha)
        phi = 0.7 ** (1.0 / alpha)
        if args.which == "radial":
            states = [(n, l, 0) for (n, l) in sorted(RADIAL_CLOSED_FORMS)]
        else:
            states = sorted(PSI_CLOSED_FORMS)
        for state in states:
            n, l, m_l = state
            qn = QuantumNumbers(n, l, m_l)
            if args.which == "radial":
                general = radial_wavefunction(qn, params, _TABLE_GRID).astype(complex)
                closed = np.asarray(
                    RADIAL_CLOSED_FORMS[(n, l)](alpha, params.r_b_alpha, _TABLE_GRID),
                    dtype=complex,
                )
            else:
                general = full_wavefunction(qn, params, _TABLE_GRID, theta, phi)
                closed = np.asarray(
                    PSI_CLOSED_FORMS[state](
                        alpha, params.r_b_alpha, _TABLE_GRID, theta, phi
                    ),
                    dtype=complex,
                )
            dev = np.abs(general - closed)
            state_max = float(np.max(dev))
            for i, r in enumerate(_TABLE_GRID):
                rows.append(
                    [
                        args.which,
                        alpha,
                        n,
                        l,
                        m_l,
                        float(r),
                        float(general[i].real),
                        float(general[i].imag),
                        float(closed[i].real),
                        float(closed[i].imag),
                        float(dev[i]),
                        state_max,
                    ]
                )
    _emit("table", columns, rows, args.format, args.output)
    return 0


def cmd_verify(args) -> int:
    perturbation = tilt_perturbation() if args.inject_fault else None
    report = run_verification(args.level, perturbation=perturbation)
    if args.format == "csv":
        columns = ["name", "measured", "threshold", "comparison", "passed"]
        rows = [
            [c["name"], c["measured"], c["threshold"], c["comparison"], c["passed"]]
            for c in report["checks"]
        ]
        _emit("verify", columns, rows, "csv", args.output)
    else:
        text = json.dumps(report, indent=2) + "\n"
        if args.output:
            with open(args.output, "w", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return 0 if report["passed"] else 2


def cmd_slice(args) -> int:
    qn = QuantumNumbers(args.n, args.l, args.m)
    params = _params(args.alpha, args)
    a = params.alpha.value
    # cell-centered grid over [-extent, extent]^2; x transverse, y along the
    # polar axis; the half-plane phi^alpha = 0
    step = 2.0 * args.extent / args.points
    coords = -args.extent + (np.arange(args.points) + 0.5) * step
    rows = []
    for y in coords:
        for x in coords:
            r = math.hypot(x, y)
            r = max(r, 1e-12)
            theta_c = math.atan2(abs(x), y)  # classical polar angle in [0, pi]
            theta_c = min(max(theta_c, 1e-9), math.pi - 1e-9)
            theta = theta_c ** (1.0 / a)
            psi = full_wavefunction(qn, params, r, theta, 0.0)
            rows.append([float(x), float(y), float(abs(psi) ** 2)])
    _emit("slice", ["x", "y", "psi_sq"], rows, args.format, args.output)
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="confhydro", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("energy", help="energy levels per quantum number and order")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--alpha-list", type=float, nargs="*", default=DEFAULT_ALPHAS)
    _add_common(p)
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("density", help="radial probability density curves")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--alpha-list", type=float, nargs="*", default=DEFAULT_ALPHAS)
    p.add_argument("--r-max", type=float, default=20.0)
    p.add_argument("--points", type=int, default=400)
    _add_common(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser(
        "table", help="published closed forms vs the general formulas"
    )
    p.add_argument("--which", choices=["radial", "psi"], required=True)
    p.add_argument("--alpha-list", type=float, nargs="*", default=[0.5, 0.75, 1.0])
    _add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the certification battery")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument(
        "--inject-fault",
        action="store_true",
        help="perturb the radial solution (negative control; must exit 2)",
    )
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("slice", help="|psi|^2 on a planar slice grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--plane", choices=["phi0"], default="phi0")
    p.add_argument("--extent", type=float, default=20.0)
    p.add_argument("--points", type=int, default=100)
    _add_common(p)
    p.set_defaults(func=cmd_slice)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the pipe; not an error
        try:
            sys.stdout.close()
        except BrokenPipeError:
            pass
        return 0


if __name__ == "__main__":
    sys.exit(main())
