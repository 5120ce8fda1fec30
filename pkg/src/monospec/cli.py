"""Command-line front-end.

Commands: check, dominance, lift, spectrum, realise-eig, realise-pair,
region, reduce, sample, figure.  Exit codes: 0 success, 1 domain error
(invalid matrix, out-of-region, infeasible), 2 usage error.  The env var
MONOSPEC_TOL overrides the default tolerance.  Numeric output uses 17
significant digits unless --pretty is given.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import sampler, svg
from .dominance import Infeasible, check_liftable, dominance_of, lift
from .errors import MonospecError
from .matrixcore import DEFAULT_TOL, load_matrix, load_stochastic, matrix_to_text, validate_monotone
from .realise import realise_eigenvalue, realise_pair
from .reduction import reduce as reduce_matrix
from .regions import (
    REGION_NAMES,
    stochastic3_real_pair_member,
    theta_member,
    xi3_pair_member,
    xi_n_member,
)
from .sampler import SampleConfig, run_experiment, sample_records
from .spectra import spectrum_of_stochastic

__all__ = ["main", "figure_series"]


class UsageError(Exception):
    pass


def _tol(args) -> float:
    if args.tol is not None:
        return args.tol
    return float(os.environ.get("MONOSPEC_TOL", DEFAULT_TOL))


def _fmt(x: float, pretty: bool) -> str:
    return f"{x:.6g}" if pretty else f"{x:.17g}"


def _print_matrix(entries, pretty: bool):
    sys.stdout.write(matrix_to_text(entries, pretty))


def _cmd_check(args) -> int:
    tol = _tol(args)
    S = load_stochastic(args.file, tol)
    try:
        validate_monotone(S, tol)
    except MonospecError as exc:
        print(f"not monotone: {exc}")
        return 1
    print("monotone")
    return 0


def _cmd_dominance(args) -> int:
    tol = _tol(args)
    M = validate_monotone(load_stochastic(args.file, tol), tol)
    _print_matrix(dominance_of(M).entries, args.pretty)
    return 0


def _cmd_lift(args) -> int:
    tol = _tol(args)
    D = load_matrix(args.file)
    if args.witness is not None:
        w = tuple(float(x) for x in args.witness.split(","))
        if len(w) != 2:
            raise UsageError("--witness expects 'm11,m33'")
    else:
        result = check_liftable(D, tol)
        if isinstance(result, Infeasible):
            print(f"infeasible: {result.violated} violated by {_fmt(result.excess, args.pretty)}",
                  file=sys.stderr)
            return 1
        w = (result.m11, result.m33)
    M = lift(D, w, tol)
    print(f"witness {_fmt(w[0], args.pretty)} {_fmt(w[1], args.pretty)}")
    _print_matrix(M.entries, args.pretty)
    return 0


def _cmd_spectrum(args) -> int:
    tol = _tol(args)
    S = load_stochastic(args.file, tol)
    spec = spectrum_of_stochastic(S)
    if args.json:
        import json

        print(json.dumps(spec.to_json_dict()))
        return 0
    grouped: list[tuple[complex, int]] = []
    for z in spec.values:
        if grouped and grouped[-1][0] == z:
            grouped[-1] = (z, grouped[-1][1] + 1)
        else:
            grouped.append((z, 1))
    for z, mult in grouped:
        text = _fmt(z.real, args.pretty)
        # pretty mode hides rounding-level imaginary residue
        if z.imag != 0.0 and not (args.pretty and abs(z.imag) <= 1e-12):
            sign = "+" if z.imag >= 0 else "-"
            text += f" {sign} {_fmt(abs(z.imag), args.pretty)}i"
        print(f"{text} (x{mult})" if mult > 1 else text)
    return 0


def _cmd_realise_eig(args) -> int:
    M = realise_eigenvalue(args.lam, _tol(args))
    _print_matrix(M.entries, args.pretty)
    return 0


def _cmd_realise_pair(args) -> int:
    M = realise_pair((args.l2, args.l3), _tol(args))
    _print_matrix(M.entries, args.pretty)
    return 0


def _parse_point(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"cannot parse point {text!r}")


def _cmd_region(args) -> int:
    tol = _tol(args)
    point = _parse_point(args.point)
    name = args.name
    if name in ("xi1", "xi2", "xi3"):
        if len(point) != 1:
            raise UsageError(f"region {name} takes a single real value")
        verdict = xi_n_member(point[0], int(name[2]), tol)
    elif name in ("theta2", "theta3"):
        z = complex(point[0], point[1] if len(point) > 1 else 0.0)
        verdict = theta_member(z, int(name[5]), tol)
    elif name in ("xi3pair", "s3realpair"):
        if len(point) != 2:
            raise UsageError(f"region {name} takes a pair 'l2,l3'")
        fn = xi3_pair_member if name == "xi3pair" else stochastic3_real_pair_member
        verdict = fn(point, tol)
    else:
        raise UsageError(f"unknown region {name!r}; expected one of {', '.join(REGION_NAMES)}")
    if verdict.member:
        print(f"member, margin {_fmt(verdict.margin, args.pretty)}")
        return 0
    print(f"not member, violated {verdict.violated}, margin {_fmt(verdict.margin, args.pretty)}")
    return 1


def _cmd_reduce(args) -> int:
    tol = _tol(args)
    M = validate_monotone(load_stochastic(args.file, tol), tol)
    print(reduce_matrix(M, tol).to_json())
    return 0


def _cmd_sample(args) -> int:
    cfg = SampleConfig(args.n, args.count, args.seed, args.workers)
    ds = sample_records(cfg)
    text = ds.to_jsonl() if args.jsonl else ds.to_csv()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


_FIGURE_AXES = {
    "figure1": ("alpha", "lambda"),
    "figure2": ("lambda2", "lambda3"),
    "figure3": ("lambda2", "lambda3"),
    "lemma1": ("sample", "slack"),
    "reduction4": ("Re", "Im"),
}


def _thin(x: np.ndarray, cap: int = 20000) -> np.ndarray:
    # display-only decimation; the CSV keeps every record
    if len(x) <= cap:
        return x
    return x[:: int(np.ceil(len(x) / cap))]


def figure_series(name: str, datasets) -> list[svg.Series]:
    series: list[svg.Series] = []
    if name == "figure1":
        traces = datasets["traces"]
        fam = traces.column("family")
        alpha = traces.column("alpha").astype(float)
        for famname in ("type1", "type2"):
            mask = fam == famname
            for which in ("lambda2", "lambda3"):
                lam = traces.column(which).astype(float)[mask]
                series.append(
                    svg.Series("points", _thin(alpha[mask]), _thin(lam), f"{famname} {which}")
                )
        return series
    if name in ("figure2", "figure3"):
        pts = datasets["points"]
        series.append(
            svg.Series("points", _thin(pts.column("lambda2").astype(float)),
                       _thin(pts.column("lambda3").astype(float)), "samples")
        )
        curves = datasets["curves"]
        cnames = curves.column("curve")
        for cname in ("C1", "C2", "C3", "C4", "C5"):
            mask = cnames == cname
            series.append(
                svg.Series("line", curves.column("lambda2").astype(float)[mask],
                           curves.column("lambda3").astype(float)[mask], cname)
            )
        if name == "figure3":
            outer = datasets["outer"]
            series.append(
                svg.Series("line", outer.column("lambda2").astype(float),
                           outer.column("lambda3").astype(float), "stochastic real pairs")
            )
        return series
    if name == "lemma1":
        slacks = datasets["slacks"]
        idx = _thin(slacks.column("index").astype(float), 4000)
        for cname in slacks.columns[1:]:
            series.append(
                svg.Series("points", idx, _thin(slacks.column(cname).astype(float), 4000), cname)
            )
        return series
    verdicts = datasets["verdicts"]
    series.append(
        svg.Series("points", _thin(verdicts.column("re").astype(float)),
                   _thin(verdicts.column("im").astype(float)), "eigenvalues")
    )
    tri = np.exp(2j * np.pi * np.array([0, 1, 2, 0]) / 3.0)
    series.append(svg.Series("line", tri.real, tri.imag, "Theta3 triangle"))
    series.append(svg.Series("line", np.array([-1.0, 0.5]), np.zeros(2), "Theta3 segment"))
    return series


def _cmd_figure(args) -> int:
    cfg = SampleConfig(max(args.n, 1), args.count, args.seed, args.workers)
    datasets = run_experiment(args.name, cfg)
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for key, ds in datasets.items():
        (outdir / f"{args.name}_{key}.csv").write_text(ds.to_csv())
    xlabel, ylabel = _FIGURE_AXES[args.name]
    text = svg.render_svg(figure_series(args.name, datasets), args.name, xlabel, ylabel)
    (outdir / f"{args.name}.svg").write_text(text)
    print(f"wrote {len(datasets)} dataset(s) and {args.name}.svg to {outdir}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monospec",
        description="Spectral analysis of monotone stochastic matrices.",
    )
    parser.add_argument("--tol", type=float, default=None,
                        help="tolerance override (default: MONOSPEC_TOL or 1e-12)")
    parser.add_argument("--pretty", action="store_true",
                        help="round numeric output for reading (default: 17 significant digits)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a matrix file and report monotonicity")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("dominance", help="print the dominance matrix D(M)")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_dominance)

    p = sub.add_parser("lift", help="lift a 2x2 non-negative matrix to a 3x3 monotone matrix")
    p.add_argument("file")
    p.add_argument("--witness", help="corner values 'm11,m33' (default: minimal witness)")
    p.set_defaults(fn=_cmd_lift)

    p = sub.add_parser("spectrum", help="print the eigenvalues of a stochastic matrix")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="emit the JSON spectrum document")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("realise-eig", help="monotone matrix with a prescribed eigenvalue")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.set_defaults(fn=_cmd_realise_eig)

    p = sub.add_parser("realise-pair", help="monotone matrix with a prescribed eigenvalue pair")
    p.add_argument("--l2", type=float, required=True)
    p.add_argument("--l3", type=float, required=True)
    p.set_defaults(fn=_cmd_realise_pair)

    p = sub.add_parser("region", help="membership verdict for a named region")
    p.add_argument("--name", required=True, choices=list(REGION_NAMES))
    p.add_argument("--point", required=True, help="'x' or 'x,y'")
    p.set_defaults(fn=_cmd_region)

    p = sub.add_parser("reduce", help="block Perron reduction of a monotone matrix (JSON)")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("sample", help="sample monotone matrices, emit per-sample records")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--jsonl", action="store_true", help="JSON-lines instead of CSV")
    p.set_defaults(fn=_cmd_sample)

    p = sub.add_parser("figure", help="emit a figure dataset as CSV plus a standalone SVG")
    p.add_argument("--name", required=True, choices=list(sampler.EXPERIMENT_NAMES))
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(fn=_cmd_figure)

    return parser


# flags whose values may start with '-' (negative numbers, pairs); merged
# into --flag=value form so argparse does not mistake them for options
_VALUE_FLAGS = {"--point", "--lambda", "--l2", "--l3", "--witness"}


def _merge_value_flags(argv: list[str]) -> list[str]:
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_value_flags(list(argv)))
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except MonospecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
