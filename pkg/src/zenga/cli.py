"""Command-line interface.

Subcommands
-----------
estimate   fit the tail index of a data file via the inequality curve
curve      emit the empirical curve as CSV (optionally render an SVG)
simulate   draw a seeded sample from a distribution spec
gof        bootstrap goodness-of-fit test for the Pareto null
bench      Monte Carlo benchmark / truncation sweep for a distribution spec

Exit codes: 0 success, 1 usage or configuration error, 2 data error,
3 numeric degeneracy.  Machine output (CSV, value files) carries 17
significant digits; terminal summaries carry 4.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .distributions import parse_distribution
from .empirical import SortedSample, lambda_curve, load_values
from .errors import DataError, DegeneracyError, DomainError, ZengaError
from .estimators import MIN_BOOT, hill_estimator, lambda_tail_index, pareto_gof_test
from .experiments import ExperimentConfig, estimator_benchmark, truncation_sweep
from .formatting import f17, f4, fbool
from .svg import line_chart

__all__ = ["main", "entry", "build_parser"]


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1 (not 2)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--in", dest="in_path", required=True, metavar="PATH",
                     help="input data file (plain values or CSV with header)")
    sub.add_argument("--column", metavar="NAME", default=None,
                     help="CSV column to read (needed only for multi-column files)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zenga", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = subs.add_parser("estimate", help="tail-index fit from a data file",
                        description="Estimate the tail index from the empirical curve.")
    _add_input_flags(p)
    p.add_argument("--k", type=int, default=None, metavar="INT",
                   help="also report the Hill estimate over the top k order statistics")
    p.add_argument("--out", metavar="PATH", default=None, help="write a CSV record here")
    p.set_defaults(func=cmd_estimate)

    p = subs.add_parser("curve", help="empirical curve as CSV",
                        description="Emit the empirical inequality curve.")
    _add_input_flags(p)
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write CSV here instead of stdout")
    p.add_argument("--render", action="store_true",
                   help="also write an SVG chart next to --out")
    p.set_defaults(func=cmd_curve)

    p = subs.add_parser("simulate", help="draw a seeded sample",
                        description="Sample a distribution spec, one value per line.")
    p.add_argument("--dist", required=True, metavar="SPEC",
                   help="pareto:ALPHA,X0 | frechet:ALPHA | lognormal:MU,SIGMA")
    p.add_argument("--n", type=int, required=True, metavar="INT", help="sample size")
    p.add_argument("--seed", type=int, default=0, metavar="INT", help="stream seed")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write values here instead of stdout")
    p.set_defaults(func=cmd_simulate)

    p = subs.add_parser("gof", help="Pareto goodness-of-fit test",
                        description="Bootstrap test of the Pareto null on a data file.")
    _add_input_flags(p)
    p.add_argument("--boot", type=int, default=199, metavar="INT",
                   help="bootstrap replicates (at least 99)")
    p.add_argument("--seed", type=int, default=0, metavar="INT", help="bootstrap seed")
    p.add_argument("--out", metavar="PATH", default=None, help="write a CSV record here")
    p.set_defaults(func=cmd_gof)

    p = subs.add_parser("bench", help="Monte Carlo benchmark / truncation sweep",
                        description="Run the estimator benchmark for a distribution spec.")
    p.add_argument("--dist", required=True, metavar="SPEC",
                   help="pareto:ALPHA,X0 | frechet:ALPHA | lognormal:MU,SIGMA")
    p.add_argument("--n", type=int, default=500, metavar="INT", help="sample size per replication")
    p.add_argument("--reps", type=int, default=100, metavar="INT", help="number of replications")
    p.add_argument("--truncate-q", default="0,0.25,0.5,0.75", metavar="LIST",
                   help="comma-separated truncation levels in [0, 1)")
    p.add_argument("--seed", type=int, default=0, metavar="INT", help="experiment seed")
    p.add_argument("--k", type=int, default=None, metavar="INT",
                   help="also benchmark the Hill estimator at this k")
    p.add_argument("--out", metavar="PATH", default=None,
                   help="write the report CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        Path(out_path).write_text(text, encoding="utf-8")


def _load_sample(args) -> SortedSample:
    return SortedSample(load_values(args.in_path, args.column))


def cmd_estimate(args) -> None:
    sample = _load_sample(args)
    est = lambda_tail_index(sample)
    hill = hill_estimator(sample, args.k) if args.k is not None else None
    lines = [
        f"alpha_hat = {f4(est.alpha_hat)}",
        f"lambda_bar = {f4(est.lambda_bar)}",
        f"n = {est.n}",
        f"m = {est.m}",
        f"suspect_infinite_mean = {fbool(est.suspect_infinite_mean)}",
    ]
    if hill is not None:
        lines += [
            f"hill_k = {hill.k}",
            f"hill_gamma_hat = {f4(hill.gamma_hat)}",
            f"hill_alpha_hat = {f4(hill.alpha_hat)}",
        ]
    if est.suspect_infinite_mean:
        lines.append("warning: alpha_hat <= 1 points at an infinite-mean regime")
    sys.stdout.write("\n".join(lines) + "\n")
    if args.out is not None:
        header = est.CSV_HEADER
        row = est.to_csv_row()
        if hill is not None:
            header += ",hill_gamma_hat,hill_alpha_hat,hill_k"
            row += f",{f17(hill.gamma_hat)},{f17(hill.alpha_hat)},{hill.k}"
        _emit(header + "\n" + row + "\n", args.out)


def cmd_curve(args) -> None:
    sample = _load_sample(args)
    curve = lambda_curve(sample)
    if args.render and args.out is None:
        raise DomainError("--render needs --out to derive the SVG path")
    _emit(curve.to_csv(), args.out)
    if args.render:
        reference = float(np.mean(curve.values))
        svg = line_chart(curve.p, curve.values, ref_y=reference,
                         x_label="p", y_label="lambda")
        svg_path = Path(args.out).with_suffix(".svg")
        svg_path.write_text(svg, encoding="utf-8")


def cmd_simulate(args) -> None:
    dist = parse_distribution(args.dist)
    values = dist.sample(args.n, args.seed)
    _emit("".join(f17(v) + "\n" for v in values), args.out)


def cmd_gof(args) -> None:
    # Flag values are checked before any file is touched.
    if args.boot < MIN_BOOT:
        raise DomainError(f"--boot must be at least {MIN_BOOT}, got {args.boot}")
    sample = _load_sample(args)
    result = pareto_gof_test(sample, args.boot, args.seed)
    sys.stdout.write(
        f"statistic = {f4(result.statistic)}\n"
        f"p_value = {f4(result.p_value)}\n"
        f"n_boot = {result.n_boot}\n"
        f"alpha_hat_null = {f4(result.alpha_hat_null)}\n"
        f"statistic_name = {result.statistic_name}\n"
    )
    if args.out is not None:
        _emit(result.CSV_HEADER + "\n" + result.to_csv_row() + "\n", args.out)


def _parse_levels(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(piece) for piece in text.split(","))
    except ValueError:
        raise DomainError(f"cannot parse truncation levels from {text!r}") from None


def cmd_bench(args) -> None:
    dist = parse_distribution(args.dist)
    levels = _parse_levels(args.truncate_q)
    config = ExperimentConfig(
        dist=dist,
        n=args.n,
        reps=args.reps,
        truncation_quantiles=levels,
        seed=args.seed,
        hill_k=args.k,
    )
    if levels == (0.0,):
        report = estimator_benchmark(config)
    else:
        report = truncation_sweep(config)
    _emit(report.to_csv(), args.out)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except DataError as exc:
        print(f"zenga: error: {exc}", file=sys.stderr)
        return 2
    except DegeneracyError as exc:
        print(f"zenga: error: {exc}", file=sys.stderr)
        return 3
    except ZengaError as exc:
        print(f"zenga: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"zenga: error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())
