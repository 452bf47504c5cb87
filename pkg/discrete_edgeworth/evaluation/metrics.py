"""
Rate metrics for the verification harness.

Includes:
- Log-log power-law fits over sweep rows
- Spearman trend checks for rescaled errors
- Interval masses of F and Ψ
"""

from collections.abc import Sequence
from dataclasses import asdict, dataclass
from typing import Any

import numpy as np
from scipy.stats import spearmanr
from sklearn.linear_model import LinearRegression
from sklearn.metrics import r2_score

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.evaluation.sup_norm import law_cdf_columns
from discrete_edgeworth.expansion.breakpoints import breakpoint_table
from discrete_edgeworth.expansion.psi import psi, psi_grid, psi_left
from discrete_edgeworth.expansion.weights import theta_weights
from discrete_edgeworth.law.exact import ExactLaw, cdf, cdf_left


@dataclass(frozen=True)
class FitResult:
    """OLS fit of log(value) on log(N)."""

    column: str
    slope: float
    intercept: float
    r_squared: float
    residual_max: float

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def _column(rows: Sequence, column: str) -> tuple[np.ndarray, np.ndarray]:
    ns, values = [], []
    for row in rows:
        get = row.get if isinstance(row, dict) else (lambda k, r=row: getattr(r, k))
        ns.append(float(get("N")))
        values.append(float(get(column)))
    return np.asarray(ns), np.asarray(values)


def fit_loglog(rows: Sequence, column: str) -> FitResult:
    """
    Fit value ≈ C·N^slope over sweep rows.

    Args:
        rows: ScalingRow objects or dicts with "N" and the column
        column: Name of the fitted column

    Returns:
        FitResult with slope, intercept, r² and max absolute log residual

    Raises:
        DomainError: With fewer than 3 rows or non-positive values
    """
    if len(rows) < 3:
        raise DomainError(f"need >= 3 rows to fit, got {len(rows)}")
    ns, values = _column(rows, column)
    if np.any(values <= 0) or np.any(ns <= 0):
        raise DomainError(f"column {column!r} must be positive for a log-log fit")

    x = np.log(ns).reshape(-1, 1)
    y = np.log(values)
    model = LinearRegression().fit(x, y)
    pred = model.predict(x)
    r2 = float(np.clip(r2_score(y, pred), 0.0, 1.0))

    return FitResult(
        column=column,
        slope=float(model.coef_[0]),
        intercept=float(model.intercept_),
        r_squared=r2,
        residual_max=float(np.max(np.abs(y - pred))),
    )


def trend_check(
    values: Sequence[float], ns: Sequence[int], config: Config | None = None
) -> dict[str, Any]:
    """
    Spearman rank correlation of values against N.

    Returns:
        Dict with rho, pvalue, ratio (max/min), no_trend (|rho| below the
        threshold) and no_increasing_trend (rho below the threshold)
    """
    config = config or DEFAULT_CONFIG
    values = np.asarray(values, dtype=float)
    if len(values) != len(ns) or len(values) < 3:
        return {"error": "need >= 3 paired values"}
    rho, pvalue = spearmanr(ns, values)
    rho = 0.0 if np.isnan(rho) else float(rho)
    threshold = config.spearman_no_trend
    return {
        "rho": rho,
        "pvalue": float(pvalue) if not np.isnan(pvalue) else 1.0,
        "ratio": float(values.max() / values.min()) if values.min() > 0 else float("inf"),
        "no_trend": abs(rho) < threshold,
        "no_increasing_trend": rho < threshold,
    }


def interval_mass(law: ExactLaw, a: float, b: float) -> float:
    """F-measure of the closed interval [a, b]."""
    if b < a:
        raise DomainError(f"empty interval [{a}, {b}]")
    return cdf(law, b) - cdf_left(law, a)


def psi_interval_mass(N: int, a: float, b: float) -> float:
    """Ψ-measure of [a, b], i.e. Ψ(b) − Ψ(a−)."""
    if b < a:
        raise DomainError(f"empty interval [{a}, {b}]")
    weights = theta_weights(N)
    return psi(N, b, weights) - psi_left(N, a, weights)


def max_interval_mass(
    law_or_n: ExactLaw | int,
    length: float,
    lo: float,
    hi: float,
    trials: int | None = None,
    seed: int | None = None,
    config: Config | None = None,
) -> dict[str, Any]:
    """
    Largest mass of random closed intervals [a, a + length] inside [lo, hi].

    law_or_n is an ExactLaw (F-measure) or a sample size N (Ψ-measure).

    Returns:
        Dict with max_mass, c_hat = max_mass·N, argmax_a, trials
    """
    config = config or DEFAULT_CONFIG
    trials = config.interval_trials if trials is None else trials
    seed = config.random_seed if seed is None else seed
    if not lo < hi - length:
        raise DomainError(f"interval length {length} does not fit in [{lo}, {hi}]")

    rng = np.random.default_rng(seed)
    a = np.sort(rng.uniform(lo, hi - length, size=trials))
    b = a + length

    if isinstance(law_or_n, ExactLaw):
        N = law_or_n.n_total
        right_b, _ = law_cdf_columns(law_or_n, b)
        _, left_a = law_cdf_columns(law_or_n, a)
        masses = right_b - left_a
    else:
        N = int(law_or_n)
        table = breakpoint_table(N, hi)
        right_b, _ = psi_grid(N, b, table)
        _, left_a = psi_grid(N, a, table)
        masses = right_b - left_a

    i = int(np.argmax(masses))
    return {
        "max_mass": float(masses[i]),
        "c_hat": float(masses[i] * N),
        "argmax_a": float(a[i]),
        "trials": trials,
    }


def monotonicity_defect(values: Sequence[float]) -> float:
    """Largest drop between consecutive values (0 for a nondecreasing sequence)."""
    v = np.asarray(values, dtype=float)
    if len(v) < 2:
        return 0.0
    return float(max(0.0, -np.diff(v).min()))
