"""
The expansion Ψ(w) = Φ(w) + N^{−1/2}Λ(w) and its left limits.

Λ(w) = −√(3/2)·φ(w)·Σ θ_n (frac(w√(2n)) − 1/2). Point evaluation sums over
n directly; grid evaluation uses Σ θ_n frac(w√(2n)) = w·A − G(w), where G(w)
is the total weight of breakpoints at or below w.
"""

import math

import numpy as np

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.expansion.breakpoints import (
    BreakpointTable,
    ExpansionBreakpoint,
    breakpoint_table,
)
from discrete_edgeworth.expansion.weights import ThetaWeights, theta_weights
from discrete_edgeworth.numerics.special import (
    compensated_sum,
    std_normal_cdf,
    std_normal_pdf,
)

SQRT_3_2 = math.sqrt(1.5)


def _resolve(N: int, weights: ThetaWeights | None) -> ThetaWeights:
    weights = weights or theta_weights(N)
    if weights.n_total != N:
        raise DomainError(f"weights built for N={weights.n_total}, not {N}")
    return weights


def _lambda_sum(
    N: int,
    w: float,
    weights: ThetaWeights,
    hits: tuple[tuple[int, int], ...] = (),
    side: str = "right",
    windowed: bool = False,
    config: Config | None = None,
) -> float:
    config = config or DEFAULT_CONFIG
    if windowed:
        n = weights.window(config.window_sigmas)
    else:
        n = np.arange(N + 1)
    x = w * weights.root_2n[n]
    fr = x - np.floor(x)
    if hits:
        hit_n = np.array([h[0] for h in hits], dtype=np.int64)
        pos = np.minimum(np.searchsorted(n, hit_n), len(n) - 1)
        pos = pos[n[pos] == hit_n]
        fr[pos] = 0.0 if side == "right" else 1.0
    terms = weights.weights[n] * (fr - 0.5)
    return -SQRT_3_2 * std_normal_pdf(w) * compensated_sum(terms)


def lambda_capital(
    N: int,
    w: float,
    weights: ThetaWeights | None = None,
    *,
    windowed: bool = False,
    config: Config | None = None,
) -> float:
    """
    Λ at w >= 0.

    Args:
        N: Sample size
        w: Nonnegative point
        weights: Theta weights for N (built if not provided)
        windowed: Sum only over |n − N/3| <= window_sigmas·√N

    Raises:
        DomainError: If w < 0
    """
    if w < 0:
        raise DomainError(f"lambda_capital needs w >= 0, got {w}")
    return _lambda_sum(N, w, _resolve(N, weights), windowed=windowed, config=config)


def _check_breakpoint(N: int, bp: ExpansionBreakpoint) -> None:
    if max(n for n, _ in bp.members) > N:
        raise DomainError(f"breakpoint {bp.w_loc} has members beyond N={N}")


def psi(
    N: int,
    w: float | ExpansionBreakpoint,
    weights: ThetaWeights | None = None,
    *,
    windowed: bool = False,
) -> float:
    """
    Ψ(w), right-continuous.

    A float w is treated as a generic point. Pass an ExpansionBreakpoint to
    evaluate exactly at a jump location. Negative w uses Ψ(−w) = 1 − Ψ(w−).
    """
    weights = _resolve(N, weights)
    if isinstance(w, ExpansionBreakpoint):
        _check_breakpoint(N, w)
        lam = _lambda_sum(N, w.w_loc, weights, w.members, "right", windowed)
        return std_normal_cdf(w.w_loc) + lam / math.sqrt(N)
    if w < 0:
        return 1.0 - psi_left(N, -w, weights, windowed=windowed)
    lam = _lambda_sum(N, w, weights, windowed=windowed)
    return std_normal_cdf(w) + lam / math.sqrt(N)


def psi_left(
    N: int,
    w: float | ExpansionBreakpoint,
    weights: ThetaWeights | None = None,
    *,
    windowed: bool = False,
) -> float:
    """
    Ψ(w−), the left limit.

    At a breakpoint every contributing frac(w√(2n)) is replaced by its left
    limit 1. At the origin Ψ(0−) = 1 − Ψ(0).
    """
    weights = _resolve(N, weights)
    if isinstance(w, ExpansionBreakpoint):
        _check_breakpoint(N, w)
        lam = _lambda_sum(N, w.w_loc, weights, w.members, "left", windowed)
        return std_normal_cdf(w.w_loc) + lam / math.sqrt(N)
    if w <= 0:
        return 1.0 - psi(N, -w, weights, windowed=windowed)
    return psi(N, w, weights, windowed=windowed)


def origin_jump(N: int) -> float:
    """Leading order of Ψ(0) − Ψ(0−): √(3/(4πN))."""
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    return math.sqrt(3.0 / (4.0 * math.pi * N))


def derivative_bound(N: int, weights: ThetaWeights | None = None) -> float:
    """
    Lipschitz constant of Ψ between breakpoints.

    Off the jumps, Ψ' = φ − √(3/(2N))·(φ'·R + φ·A) with |R| <= S/2 and
    |φ'| <= φ(1).
    """
    weights = _resolve(N, weights)
    phi0 = std_normal_pdf(0.0)
    return phi0 + math.sqrt(3.0 / (2.0 * N)) * (
        std_normal_pdf(1.0) * weights.total / 2.0 + phi0 * weights.slope_sum
    )


def _lambda_from_floor(
    x: np.ndarray, floor_sum: np.ndarray, weights: ThetaWeights
) -> np.ndarray:
    inner = x * weights.slope_sum - floor_sum - 0.5 * weights.total
    return -SQRT_3_2 * std_normal_pdf(x) * inner


def lambda_grid(
    N: int,
    ws,
    table: BreakpointTable | None = None,
    weights: ThetaWeights | None = None,
    side: str = "right",
) -> np.ndarray:
    """Λ (or its left limit) at nonnegative points <= table.w_max."""
    weights = _resolve(N, weights)
    x = np.asarray(ws, dtype=float)
    if np.any(x < 0):
        raise DomainError("lambda_grid needs nonnegative points")
    if table is None:
        table = breakpoint_table(N, max(float(x.max(initial=0.0)), 1.0), weights)
    if np.any(x > table.w_max):
        raise DomainError(f"points beyond breakpoint range w_max={table.w_max}")
    idx = np.searchsorted(table.loc, x, side="right" if side == "right" else "left")
    return _lambda_from_floor(x, table.cum_weight[idx], weights)


def psi_grid(
    N: int,
    ws,
    table: BreakpointTable | None = None,
    weights: ThetaWeights | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Ψ and Ψ(·−) on an array of points with |w| <= table.w_max.

    Returns:
        (right values, left values), each shaped like ws
    """
    weights = _resolve(N, weights)
    w = np.asarray(ws, dtype=float)
    x = np.abs(w)
    if table is None:
        table = breakpoint_table(N, max(float(x.max(initial=0.0)), 1.0), weights)
    root_n = math.sqrt(N)
    cdf = std_normal_cdf(x)
    right = cdf + lambda_grid(N, x, table, weights, "right") / root_n
    left = cdf + lambda_grid(N, x, table, weights, "left") / root_n
    out_right = np.where(w >= 0, right, 1.0 - left)
    out_left = np.where(w > 0, left, 1.0 - right)
    return out_right, out_left
