"""
Sup-norm distance between the exact law and a continuous-or-jump approximation.

F is a pure jump function and Ψ is piecewise smooth with enumerable jumps.
Both sides are evaluated from the right and from the left at every atom and
every breakpoint on [0, w_max]; the negative half follows by symmetry
(F(−w) = 1 − F(w−), and likewise for Ψ and Φ). Between grid points F is
constant and g is Lipschitz, which bounds |F − g| inside every gap; gaps
whose bound exceeds the current maximum are refined.
"""

import math
from dataclasses import dataclass

import numpy as np

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.expansion.breakpoints import BreakpointTable, breakpoint_table
from discrete_edgeworth.expansion.psi import derivative_bound, psi_grid
from discrete_edgeworth.expansion.weights import ThetaWeights, theta_weights
from discrete_edgeworth.law.exact import ExactLaw
from discrete_edgeworth.logs import log_event
from discrete_edgeworth.numerics.special import std_normal_cdf, std_normal_pdf, std_normal_sf


@dataclass(frozen=True)
class SupResult:
    """
    Sup-norm scan result.

    sup is attained at argmax (a lower bound for the true sup); upper is a
    certified upper bound including the tail beyond w_max.
    """

    sup: float
    argmax: float
    upper: float
    tail_budget: float
    n_points: int
    n_refined: int

    def as_tuple(self) -> tuple[float, float]:
        return self.sup, self.argmax


def law_cdf_columns(law: ExactLaw, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """F and F(·−) at sorted float points."""
    idx_r = np.searchsorted(law.w, points, side="right")
    idx_l = np.searchsorted(law.w, points, side="left")
    right = np.where(idx_r > 0, law.cum[np.maximum(idx_r - 1, 0)], 0.0)
    left = np.where(idx_l > 0, law.cum[np.maximum(idx_l - 1, 0)], 0.0)
    return right, left


def _gap_bound(e_a: np.ndarray, e_b: np.ndarray, width: np.ndarray, lip: float) -> np.ndarray:
    """Max over a gap of min(e_a + L(x − a), e_b + L(b − x))."""
    span = lip * width
    tent = 0.5 * (e_a + e_b + span)
    return np.where(np.abs(e_a - e_b) <= span, tent, np.maximum(e_a, e_b))


class _Approximation:
    """g = Φ or g = Ψ evaluated on arrays, right and left values."""

    def __init__(self, N: int, kind: str, table: BreakpointTable | None, weights: ThetaWeights | None):
        self.N = N
        self.kind = kind
        self.table = table
        self.weights = weights

    def values(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        if self.kind == "phi":
            v = std_normal_cdf(x)
            return v, v
        return psi_grid(self.N, x, self.table, self.weights)


def sup_distance(
    law: ExactLaw,
    g: str = "psi",
    w_max: float | None = None,
    *,
    table: BreakpointTable | None = None,
    weights: ThetaWeights | None = None,
    config: Config | None = None,
) -> SupResult:
    """
    sup_w |F(w) − g(w)| for g = Ψ ("psi") or Φ ("phi").

    Args:
        law: Exact law for sample size N
        g: "psi" or "phi"
        w_max: Scan limit (>= 8); beyond it the tail mass of F and Φ and
            the bound on N^{−1/2}|Λ| enter the upper bound
        table: Breakpoints for N covering w_max (built if not provided)
        weights: Theta weights for N (built if not provided)
        config: Configuration (uses defaults if not provided)

    Raises:
        DomainError: If w_max < 8 or g is unknown
    """
    config = config or DEFAULT_CONFIG
    w_max = config.w_max if w_max is None else float(w_max)
    if w_max < 8.0:
        raise DomainError(f"w_max must be >= 8, got {w_max}")
    if g not in ("psi", "phi"):
        raise DomainError(f"g must be 'psi' or 'phi', got {g!r}")

    N = law.n_total
    atoms = law.w[(law.w > 0) & (law.w <= w_max)]
    if g == "psi":
        weights = weights or theta_weights(N)
        if table is None or table.n_total != N or table.w_max < w_max:
            table = breakpoint_table(N, w_max, weights)
        jumps = table.loc[table.loc <= w_max]
        lip = derivative_bound(N, weights)
    else:
        jumps = np.zeros(0)
        lip = std_normal_pdf(0.0)
    approx = _Approximation(N, g, table, weights)

    grid = np.unique(np.concatenate([[0.0], atoms, jumps, [w_max]]))
    f_right, f_left = law_cdf_columns(law, grid)
    g_right, g_left = approx.values(grid)

    cand_right = np.abs(f_right - g_right)
    cand_left = np.abs(f_left - g_left)
    i_r, i_l = int(np.argmax(cand_right)), int(np.argmax(cand_left))
    if cand_right[i_r] >= cand_left[i_l]:
        best, argmax = float(cand_right[i_r]), float(grid[i_r])
    else:
        best, argmax = float(cand_left[i_l]), float(grid[i_l])

    # F is constant on [a, b) at f_right[a]; g runs from g_right[a] to g_left[b]
    level = f_right[:-1]
    e_a = np.abs(level - g_right[:-1])
    e_b = np.abs(level - g_left[1:])
    width = np.diff(grid)
    bound = _gap_bound(e_a, e_b, width, lip)
    flagged = np.flatnonzero(bound > best + config.sup_slack)

    upper = best
    p = config.refine_points
    if len(flagged):
        frac = np.arange(1, p + 1) / (p + 1)
        a = grid[flagged]
        pts = a[:, None] + width[flagged][:, None] * frac[None, :]
        g_pts, _ = approx.values(pts.ravel())
        err = np.abs(level[flagged][:, None] - g_pts.reshape(pts.shape))
        j = int(np.argmax(err))
        if err.flat[j] > best:
            best, argmax = float(err.flat[j]), float(pts.flat[j])

        edges = np.concatenate([e_a[flagged][:, None], err, e_b[flagged][:, None]], axis=1)
        sub = _gap_bound(edges[:, :-1], edges[:, 1:], (width[flagged] / (p + 1))[:, None], lip)
        upper = max(upper, float(sub.max()))
    unflagged = np.ones(len(bound), dtype=bool)
    unflagged[flagged] = False
    if unflagged.any():
        upper = max(upper, float(bound[unflagged].max()))
    upper = max(upper, best)

    f_tail = max(0.0, 1.0 - float(law_cdf_columns(law, np.array([w_max]))[0][0]))
    tail = f_tail + std_normal_sf(w_max)
    if g == "psi":
        tail += math.sqrt(3.0 / (2.0 * N)) * std_normal_pdf(w_max) * weights.total / 2.0
    upper = max(upper, tail)

    log_event(
        event="sup_distance", n=N, g=g, sup=best, argmax=argmax,
        upper=upper, points=len(grid), refined=len(flagged),
    )
    return SupResult(
        sup=best,
        argmax=argmax,
        upper=upper,
        tail_budget=tail,
        n_points=len(grid),
        n_refined=len(flagged),
    )


def sup_psi_minus_phi(N: int, w_max: float = 8.0, table: BreakpointTable | None = None) -> float:
    """
    Upper bound on sup_w |Ψ(w) − Φ(w)| = N^{−1/2} sup_w |Λ(w)|.

    Exact at every breakpoint from both sides; inside gaps the Lipschitz
    constant of Ψ − Φ bounds the excursion.
    """
    weights = theta_weights(N)
    if table is None or table.n_total != N or table.w_max < w_max:
        table = breakpoint_table(N, w_max, weights)
    grid = np.concatenate([[0.0], table.loc[table.loc <= w_max], [w_max]])
    right, left = psi_grid(N, grid, table, weights)
    phi = std_normal_cdf(grid)
    e_right, e_left = np.abs(right - phi), np.abs(left - phi)
    lip = derivative_bound(N, weights) + std_normal_pdf(0.0)
    inside = _gap_bound(e_right[:-1], e_left[1:], np.diff(grid), lip)
    tail = math.sqrt(3.0 / (2.0 * N)) * std_normal_pdf(w_max) * weights.total / 2.0
    return float(max(e_right.max(), e_left.max(), inside.max(), tail))


def grid_scan_sup(law: ExactLaw, step: float = 1e-5, w_lim: float = 6.0) -> float:
    """
    Reference scan of sup |F − Φ| on the points i·step in [−w_lim, w_lim].

    Both F(x) and F(x−) are compared with Φ(x) at each point.
    """
    if step <= 0:
        raise DomainError(f"step must be > 0, got {step}")
    count = int(math.floor(w_lim / step))
    best = 0.0
    for chunk in np.array_split(np.arange(-count, count + 1), max(1, (2 * count + 1) // 200_000)):
        x = chunk * step
        right, left = law_cdf_columns(law, x)
        phi = std_normal_cdf(x)
        best = max(best, float(np.abs(right - phi).max()), float(np.abs(left - phi).max()))
    return best
