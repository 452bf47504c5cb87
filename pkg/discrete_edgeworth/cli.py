"""
CLI entrypoints for the discrete expansion engine.

Usage:
    discrete-edgeworth law --n 50 --out law.csv
    discrete-edgeworth compare --n 300
    discrete-edgeworth scaling --n-list 48 96 192 --out scaling.csv
    discrete-edgeworth figure1 --out figure1.csv
    discrete-edgeworth theta-check --tol 1e-12 --seed 7
    discrete-edgeworth oracle --n 8 --statistic student_t
    discrete-edgeworth witness --n 300
    discrete-edgeworth expansion --n 100 --w-max 3 --step 0.01
"""

import argparse
import logging
import math
import os
import sys

import numpy as np
import pandas as pd
from pydantic import ValidationError

from discrete_edgeworth.config import DEFAULT_CONFIG, Config, settings
from discrete_edgeworth.errors import DomainError, SweepError
from discrete_edgeworth.evaluation.harness import VerificationHarness, compute_row
from discrete_edgeworth.evaluation.oracle import brute_force_law
from discrete_edgeworth.export import (
    write_curve_csv,
    write_expansion_csv,
    write_fit_json,
    write_frame_csv,
    write_json,
    write_law_csv,
    write_scaling_csv,
)
from discrete_edgeworth.law.exact import build_exact_law
from discrete_edgeworth.logs import log_event
from discrete_edgeworth.models import RunConfig
from discrete_edgeworth.oscillatory.series import (
    SeriesConfig,
    kernel_from_tag,
    lambda_series,
    lower_bound_witness,
)
from discrete_edgeworth.oscillatory.theta import poisson_theta_pair

logger = logging.getLogger("discrete_edgeworth")


def setup_logging(verbose: bool = False):
    """Configure logging on stderr; stdout carries data for --out -."""
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def _grid(w_min: float, w_max: float, step: float) -> np.ndarray:
    count = int(math.floor((w_max - w_min) / step + 1e-6)) + 1
    return w_min + step * np.arange(count)


def cmd_law(run: RunConfig, config: Config) -> int:
    law = build_exact_law(run.n, config)
    write_law_csv(law, run.out)
    return 0


def cmd_compare(run: RunConfig, config: Config) -> int:
    row = compute_row(run.n, run.w_max, config)
    write_json(row.to_dict(include_runtime=run.timing), run.out)
    return 0


def cmd_scaling(run: RunConfig, config: Config, verbose: bool = False) -> int:
    harness = VerificationHarness(config, verbose=verbose)
    results = harness.run_sweep(run.n_list)
    write_scaling_csv(results["rows"], run.out)
    for name, fit in results["fits"].items():
        if run.out == "-":
            log_event(event="fit", **fit.to_dict())
        else:
            stem, _ = os.path.splitext(run.out)
            write_fit_json(fit, f"{stem}.fit_{name}.json")
    return 0


def cmd_figure1(run: RunConfig, config: Config) -> int:
    cfg = SeriesConfig(M=run.m, kernel=kernel_from_tag(run.kernel))
    ws = _grid(run.w_min, run.w_max, run.step)
    write_curve_csv(ws, lambda_series(run.n, ws, cfg), run.out)
    return 0


def cmd_theta_check(run: RunConfig, config: Config) -> int:
    rng = np.random.default_rng(run.seed)
    z_lo, z_hi = config.theta_z_range
    zs = np.exp(rng.uniform(math.log(z_lo), math.log(z_hi), size=run.pairs))
    bs = rng.uniform(0.0, 1.0, size=run.pairs)

    records = []
    for z, b in zip(zs, bs):
        pair = poisson_theta_pair(float(z), float(b), run.tol)
        records.append(
            {
                "z": pair.z,
                "b": pair.b,
                "lhs_re": pair.lhs.real,
                "lhs_im": pair.lhs.imag,
                "rhs_re": pair.rhs.real,
                "rhs_im": pair.rhs.imag,
                "abs_diff": pair.abs_diff,
                "m_radius": pair.m_radius,
                "l_radius": pair.l_radius,
            }
        )
    df = pd.DataFrame(records)
    write_frame_csv(df, run.out)

    worst = float(df["abs_diff"].max())
    log_event(event="theta_check", pairs=len(df), worst=worst, tol=run.tol)
    return 0 if worst <= run.tol else 1


def cmd_oracle(run: RunConfig, config: Config) -> int:
    law = brute_force_law(run.n, run.statistic, config)
    write_law_csv(law, run.out)
    return 0


def cmd_witness(run: RunConfig, config: Config) -> int:
    cfg = SeriesConfig.for_n(run.n, kernel_from_tag(run.kernel))
    result = lower_bound_witness(run.n, cfg, config)
    write_json(result.to_dict(), run.out)
    return 0


def cmd_expansion(run: RunConfig, config: Config) -> int:
    ws = _grid(run.w_min, run.w_max, run.step)
    write_expansion_csv(run.n, ws, run.out, run.w_max)
    return 0


COMMANDS = {
    "law": cmd_law,
    "compare": cmd_compare,
    "figure1": cmd_figure1,
    "theta-check": cmd_theta_check,
    "oracle": cmd_oracle,
    "witness": cmd_witness,
    "expansion": cmd_expansion,
}


def build_parser() -> argparse.ArgumentParser:
    cfg = DEFAULT_CONFIG
    parser = argparse.ArgumentParser(
        prog="discrete-edgeworth",
        description="Exact law, expansion and rate checks for the self-normalised sum",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Verbose output")
    parser.add_argument("--threads", type=int, default=None, help="Worker cap (default: DE_THREADS or cores)")

    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        p = subparsers.add_parser(name, help=help_text)
        p.add_argument("--out", default="-", help="Output path ('-' for stdout)")
        return p

    p = add("law", "Exact law as CSV")
    p.add_argument("--n", type=int, required=True, help="Sample size")

    p = add("compare", "Sup distances of the law to the expansion and to the normal")
    p.add_argument("--n", type=int, required=True, help="Sample size")
    p.add_argument("--w-max", type=float, default=cfg.w_max, help="Scan limit (>= 8)")
    p.add_argument("--timing", action="store_true", help="Include runtime_ms")

    p = add("scaling", "Scaling sweep over several N")
    p.add_argument("--n-list", type=int, nargs="+", default=list(cfg.sweep_ns), help="Sample sizes, ascending")

    p = add("figure1", "Oscillatory series on a grid")
    p.add_argument("--n", type=int, default=cfg.figure1_n)
    p.add_argument("--m", type=int, default=cfg.figure1_m)
    p.add_argument("--kernel", choices=["unit", "figure1"], default="figure1")
    p.add_argument("--w-min", type=float, default=cfg.figure1_w_min)
    p.add_argument("--w-max", type=float, default=cfg.figure1_w_max)
    p.add_argument("--step", type=float, default=cfg.figure1_step)

    p = add("theta-check", "Poisson summation identity on random (z, b)")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--seed", type=int, default=cfg.random_seed)
    p.add_argument("--pairs", type=int, default=cfg.theta_check_pairs)

    p = add("oracle", "Brute-force law over all 3^N tuples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--statistic", choices=["w", "student_t"], default="w")

    p = add("witness", "Resonant point maximising |lambda|")
    p.add_argument("--n", type=int, required=True, help="Sample size divisible by 3")
    p.add_argument("--kernel", choices=["unit", "figure1"], default="unit")

    p = add("expansion", "Expansion values on a grid plus every breakpoint")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--w-min", type=float, default=0.0)
    p.add_argument("--w-max", type=float, default=3.0)
    p.add_argument("--step", type=float, default=0.01)

    return parser


def main(argv=None) -> int:
    """Main CLI entrypoint; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    fields = {k: v for k, v in vars(args).items() if k != "verbose" and v is not None}
    try:
        run = RunConfig(**fields)
        config = Config(threads=run.threads or settings.threads)
        if run.command == "scaling":
            return cmd_scaling(run, config, verbose=args.verbose)
        return COMMANDS[run.command](run, config)
    except ValidationError as exc:
        for err in exc.errors():
            print(f"error: {err['msg']}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SweepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3 if isinstance(exc.__cause__, OSError) else 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
