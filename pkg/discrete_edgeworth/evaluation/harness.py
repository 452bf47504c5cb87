"""
Verification Harness.

Complete verification pipeline that:
1. Builds the exact law for every N of a sweep
2. Measures sup |F − Ψ| and sup |F − Φ| with certified bounds
3. Records origin and off-origin point masses
4. Fits log-log rates and checks rescaled errors for trends
5. Evaluates the lower-bound witness on multiples of 3
6. Saves artifacts
"""

import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from datetime import datetime
from typing import Any

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError, SweepError
from discrete_edgeworth.evaluation.metrics import fit_loglog, max_interval_mass, trend_check
from discrete_edgeworth.evaluation.sup_norm import sup_distance
from discrete_edgeworth.expansion.breakpoints import breakpoint_table
from discrete_edgeworth.expansion.weights import theta_weights
from discrete_edgeworth.export import write_fit_json, write_json, write_scaling_csv
from discrete_edgeworth.law.exact import build_exact_law, max_off_origin_mass, origin_mass
from discrete_edgeworth.logs import banner, log_event, logger
from discrete_edgeworth.oscillatory.series import lower_bound_witness


@dataclass(frozen=True)
class ScalingRow:
    """One row of the scaling report."""

    N: int
    sup_f_psi: float
    sup_f_phi: float
    p0: float
    max_off_origin_mass: float
    n_breakpoints: int
    runtime_ms: int

    def to_dict(self, include_runtime: bool = True) -> dict[str, Any]:
        row = asdict(self)
        if not include_runtime:
            row.pop("runtime_ms")
        return row


def compute_row(N: int, w_max: float | None = None, config: Config | None = None) -> ScalingRow:
    """Build the law for N and measure both sup distances."""
    config = config or DEFAULT_CONFIG
    w_max = config.w_max if w_max is None else w_max
    start = time.perf_counter()

    law = build_exact_law(N, config)
    weights = theta_weights(N)
    table = breakpoint_table(N, w_max, weights)
    f_psi = sup_distance(law, "psi", w_max, table=table, weights=weights, config=config)
    f_phi = sup_distance(law, "phi", w_max, config=config)

    row = ScalingRow(
        N=N,
        sup_f_psi=f_psi.sup,
        sup_f_phi=f_phi.sup,
        p0=origin_mass(law),
        max_off_origin_mass=max_off_origin_mass(law),
        n_breakpoints=len(table),
        runtime_ms=int((time.perf_counter() - start) * 1000),
    )
    log_event(event="sweep_row", **row.to_dict())
    return row


def scaling_sweep(
    Ns: list[int],
    w_max: float | None = None,
    config: Config | None = None,
    verbose: bool = False,
) -> list[ScalingRow]:
    """
    One ScalingRow per N, computed independently on a thread pool.

    Rows come back in input order.

    Raises:
        DomainError: If Ns is empty or not sorted ascending
        SweepError: If any row fails; carries the offending N
    """
    config = config or DEFAULT_CONFIG
    Ns = [int(n) for n in Ns]
    if not Ns:
        raise DomainError("Ns must not be empty")
    if Ns != sorted(Ns):
        raise DomainError(f"Ns must be sorted ascending, got {Ns}")

    def run(n: int) -> ScalingRow:
        try:
            return compute_row(n, w_max, config)
        except Exception as exc:
            raise SweepError(n, str(exc)) from exc

    if verbose:
        banner("SCALING SWEEP")
    rows = []
    with ThreadPoolExecutor(max_workers=max(1, min(config.threads, len(Ns)))) as pool:
        for row in pool.map(run, Ns):
            rows.append(row)
            if verbose:
                logger.info(
                    f"✓ N={row.N}: sup|F-Psi|={row.sup_f_psi:.3e} "
                    f"sup|F-Phi|={row.sup_f_phi:.3e} p0={row.p0:.5f}"
                )
    return rows


class VerificationHarness:
    """
    Rate verification across a sweep of N.

    Example:
        harness = VerificationHarness()
        results = harness.run_verification()
        harness.save_artifacts(results)
    """

    def __init__(self, config: Config | None = None, verbose: bool = True):
        """
        Initialize verification harness.

        Args:
            config: Configuration (uses defaults if not provided)
            verbose: Log banners and progress lines
        """
        self.config = config or DEFAULT_CONFIG
        self.verbose = verbose

    def run_sweep(self, ns: list[int] | None = None) -> dict[str, Any]:
        """Sweep rows plus fits and trend checks of the rescaled errors."""
        ns = ns or self.config.sweep_ns
        rows = scaling_sweep(ns, config=self.config, verbose=self.verbose)

        fits = {}
        if len(rows) >= 3:
            fits = {c: fit_loglog(rows, c) for c in ("sup_f_psi", "sup_f_phi")}

        n_vals = [r.N for r in rows]
        trends = {
            "n_sup_f_psi": trend_check([r.N * r.sup_f_psi for r in rows], n_vals, self.config),
            "sqrt_n_sup_f_phi": trend_check(
                [math.sqrt(r.N) * r.sup_f_phi for r in rows], n_vals, self.config
            ),
            "n_max_off_origin_mass": trend_check(
                [r.N * r.max_off_origin_mass for r in rows], n_vals, self.config
            ),
            "p0_ratio": [r.p0 * math.sqrt(4.0 * math.pi * r.N / 3.0) for r in rows],
        }

        if self.verbose:
            banner("RATE FITS")
            for name, fit in fits.items():
                logger.info(f"  {name}: slope={fit.slope:.4f} r2={fit.r_squared:.4f}")
        return {"rows": rows, "fits": fits, "trends": trends}

    def run_witness(self, ns: list[int] | None = None) -> list[dict[str, Any]]:
        """
        Witness value against √N·sup|F − Φ| for each N divisible by 3.

        The comparison allows the remainder 10·(log N)⁵/√N.
        """
        ns = ns or self.config.witness_ns
        if self.verbose:
            banner("LOWER-BOUND WITNESS")
        out = []
        for n in ns:
            witness = lower_bound_witness(n, config=self.config)
            law = build_exact_law(n, self.config)
            phi = sup_distance(law, "phi", config=self.config)
            slack = 10.0 * math.log(n) ** 5 / math.sqrt(n)
            scaled = math.sqrt(n) * phi.sup
            floor = 0.8 * (witness.envelope_k1 - witness.tail_bound)
            entry = {
                **witness.to_dict(),
                "sqrt_n_sup_f_phi": scaled,
                "remainder": slack,
                "upper_ok": witness.value <= scaled + slack,
                "lower_ok": witness.value >= floor,
            }
            out.append(entry)
            if self.verbose:
                logger.info(f"✓ N={n}: |lambda(w*)|={witness.value:.4e} at w*={witness.w_star:.5f}")
        return out

    def run_interval_check(self, n: int = 300) -> dict[str, Any]:
        """Largest F-mass of random intervals of length 1/N in [0.1, 3]."""
        law = build_exact_law(n, self.config)
        return max_interval_mass(law, 1.0 / n, 0.1, 3.0, config=self.config)

    def run_verification(self) -> dict[str, Any]:
        """Sweep, witness and interval checks."""
        results = self.run_sweep()
        results["witness"] = self.run_witness()
        results["interval"] = self.run_interval_check()
        results["timestamp"] = datetime.now().isoformat()
        return results

    def save_artifacts(self, results: dict[str, Any], save_dir: str | None = None) -> dict[str, str]:
        """
        Save verification artifacts.

        Args:
            results: Results from run_sweep() or run_verification()
            save_dir: Directory to save to (defaults to config.reports_dir)

        Returns:
            Dict mapping artifact type to file path
        """
        save_dir = save_dir or self.config.reports_dir
        os.makedirs(save_dir, exist_ok=True)
        paths = {}

        if self.verbose:
            banner("SAVING ARTIFACTS")

        path = os.path.join(save_dir, "scaling.csv")
        write_scaling_csv(results["rows"], path)
        paths["scaling"] = path

        for name, fit in results.get("fits", {}).items():
            path = os.path.join(save_dir, f"fit_{name}.json")
            write_fit_json(fit, path)
            paths[f"fit_{name}"] = path

        summary = {k: v for k, v in results.items() if k not in ("rows", "fits")}
        path = os.path.join(save_dir, "summary.json")
        write_json(summary, path)
        paths["summary"] = path

        if self.verbose:
            for kind, p in paths.items():
                logger.info(f"✓ {kind}: {p}")
        return paths
