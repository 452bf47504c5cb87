"""
The truncated oscillatory series λ and its lower-bound witness.

λ(w) = √(3/2)·φ(w)·Σ_{k=1}^{M} f(k, M)·exp(−π²k²w²/6)·sin(2πkw√(2N/3))/(πk)
"""

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.expansion.psi import SQRT_3_2
from discrete_edgeworth.expansion.weights import ThetaWeights, theta_weights
from discrete_edgeworth.logs import log_event
from discrete_edgeworth.numerics.special import (
    compensated_sum,
    sin_2pi,
    std_normal_pdf,
)
from discrete_edgeworth.oscillatory.fourier import tau_matrix
from discrete_edgeworth.oscillatory.theta import theta_sum_direct, theta_term

KernelFn = Callable[[np.ndarray, int], np.ndarray]


def _unit(k: np.ndarray, M: int) -> np.ndarray:
    return np.ones_like(np.asarray(k, dtype=float))


def _figure1(k: np.ndarray, M: int) -> np.ndarray:
    return np.exp(-((np.asarray(k, dtype=float) / M) ** (2.0 / 3.0)))


@dataclass(frozen=True)
class KernelChoice:
    """Damping factors f(k, M) in [0, 1] applied to the k-th harmonic."""

    tag: str
    evaluate: KernelFn = field(repr=False)

    def __call__(self, k, M: int) -> np.ndarray:
        f = np.asarray(self.evaluate(np.asarray(k), M), dtype=float)
        if np.any(f < 0) or np.any(f > 1):
            raise DomainError(f"kernel {self.tag!r} left [0, 1]")
        return f


UNIT_KERNEL = KernelChoice("unit", _unit)
FIGURE1_KERNEL = KernelChoice("figure1", _figure1)

KERNELS = {"unit": UNIT_KERNEL, "figure1": FIGURE1_KERNEL}


def custom_kernel(fn: KernelFn) -> KernelChoice:
    """Wrap a vectorised f(k, M) as a kernel."""
    return KernelChoice("custom", fn)


def kernel_from_tag(tag: str) -> KernelChoice:
    if tag not in KERNELS:
        raise DomainError(f"unknown kernel {tag!r}; expected one of {sorted(KERNELS)}")
    return KERNELS[tag]


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation M and kernel for λ."""

    M: int
    kernel: KernelChoice = UNIT_KERNEL

    def __post_init__(self):
        if self.M < 1:
            raise DomainError(f"M must be >= 1, got {self.M}")

    @classmethod
    def for_n(cls, N: int, kernel: KernelChoice = UNIT_KERNEL) -> "SeriesConfig":
        """Default truncation M = ⌊log N⌋."""
        return cls(M=max(1, math.floor(math.log(N))), kernel=kernel)


def _phases(N: int, w, k: np.ndarray, resonance: int | None) -> np.ndarray:
    if resonance is not None:
        # w = j/(4√(2N/3)) makes k·w·√(2N/3) = k·j/4 exactly
        return ((k.astype(np.int64) * resonance) % 4) / 4.0
    c = math.sqrt(2.0 * N / 3.0)
    return np.mod(np.multiply.outer(k, np.asarray(w, dtype=float)) * c, 1.0)


def lambda_series(
    N: int, w, cfg: SeriesConfig, *, resonance: int | None = None
):
    """
    λ at w (scalar or array).

    Args:
        N: Sample size, N >= 3
        w: Positive point(s)
        cfg: Truncation and kernel
        resonance: Odd or even integer j with w = j/(4√(2N/3)); phases are
            then taken exactly instead of from the float product

    Raises:
        DomainError: If N < 3 or any w <= 0
    """
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    w_arr = np.asarray(w, dtype=float)
    if np.any(w_arr <= 0):
        raise DomainError("lambda_series needs w > 0")
    if resonance is not None and w_arr.ndim != 0:
        raise DomainError("resonance applies to a single point")

    k = np.arange(1, cfg.M + 1, dtype=float)
    phases = _phases(N, w_arr, k, resonance)
    if resonance is not None:
        phases = phases.reshape(-1)
    f = cfg.kernel(k, cfg.M)
    k_col = k.reshape((-1,) + (1,) * w_arr.ndim)
    f_col = f.reshape(k_col.shape)
    damp = np.exp(-(math.pi**2) * k_col**2 * w_arr**2 / 6.0)
    terms = f_col * damp * sin_2pi(phases.reshape(damp.shape)) / (math.pi * k_col)
    out = SQRT_3_2 * std_normal_pdf(w_arr) * terms.sum(axis=0)
    return float(out) if w_arr.ndim == 0 else out


def kernel_envelope(w, M: int, kernel: KernelChoice = UNIT_KERNEL):
    """Term-wise bound √(3/2)·φ(w)·Σ_k f(k, M)·exp(−π²k²w²/6)/(πk)."""
    w_arr = np.asarray(w, dtype=float)
    k = np.arange(1, M + 1, dtype=float).reshape((-1,) + (1,) * w_arr.ndim)
    f = kernel(np.arange(1, M + 1), M).reshape(k.shape)
    terms = f * np.exp(-(math.pi**2) * k**2 * w_arr**2 / 6.0) / (math.pi * k)
    out = SQRT_3_2 * std_normal_pdf(w_arr) * terms.sum(axis=0)
    return float(out) if w_arr.ndim == 0 else out


def harmonic_envelope(w: float, k: int) -> float:
    """Size of the k-th unit-kernel harmonic: √(3/2)·φ(w)·exp(−π²k²w²/6)/(πk)."""
    return SQRT_3_2 * std_normal_pdf(w) * math.exp(-(math.pi**2) * k * k * w * w / 6.0) / (math.pi * k)


def harmonic_tail(w: float, first: int = 2, last: int = 200) -> float:
    """Σ_{k=first}^{last} harmonic_envelope(w, k); later terms are below double precision."""
    return compensated_sum([harmonic_envelope(w, k) for k in range(first, last + 1)])


def fourier_lambda_direct(
    N: int, w: float, M: int, weights: ThetaWeights | None = None
) -> float:
    """
    Λ with every frac(w√(2n)) − 1/2 replaced by its M-term Fourier series.

    Equals √(3/2)·φ(w)·Σ_{k<=M} theta_sum_direct(N, k, w)/(πk).
    """
    if w <= 0:
        raise DomainError(f"w must be > 0, got {w}")
    weights = weights or theta_weights(N)
    tau = tau_matrix(w * weights.root_2n, M)
    return -SQRT_3_2 * std_normal_pdf(w) * compensated_sum(weights.weights * tau)


@dataclass(frozen=True)
class SeriesCheck:
    """Closed-form series against the direct n-sum at one point."""

    series: float
    direct: float
    residual_bound: float
    per_k_residual: tuple[float, ...]
    phase_bound: float

    @property
    def gap(self) -> float:
        return abs(self.series - self.direct)


def series_vs_direct(N: int, w: float, M: int | None = None) -> SeriesCheck:
    """
    Compare λ (unit kernel) with the direct Fourier form of Λ.

    residual_bound is √(3/2)·φ(w)·Σ_k |direct_k − closed_k|/(πk), measured.
    phase_bound does not look at either sum: the closed form replaces √(2n)
    by its tangent line at N/3, and |sin a − sin b| <= |a − b| gives
    gap <= √(3/2)·φ(w)·2wM·Σ_n θ_n·|√(2n) − tangent(n)|
    up to exponentially small dual terms.
    """
    cfg = SeriesConfig.for_n(N) if M is None else SeriesConfig(M)
    series = lambda_series(N, w, cfg)
    direct = fourier_lambda_direct(N, w, cfg.M)
    residuals = []
    for k in range(1, cfg.M + 1):
        closed = theta_term(N, k, w).closed
        residuals.append(abs(theta_sum_direct(N, k, w) - closed))
    bound = SQRT_3_2 * std_normal_pdf(w) * compensated_sum(
        [r / (math.pi * k) for k, r in enumerate(residuals, start=1)]
    )
    weights = theta_weights(N)
    root_center = math.sqrt(2.0 * N / 3.0)
    tangent = root_center + (np.arange(N + 1) - N / 3.0) / root_center
    drift = compensated_sum(weights.weights * np.abs(weights.root_2n - tangent))
    phase_bound = SQRT_3_2 * std_normal_pdf(w) * 2.0 * w * cfg.M * drift
    return SeriesCheck(series, direct, bound, tuple(residuals), phase_bound)


@dataclass(frozen=True)
class WitnessResult:
    """Resonant point maximising |λ| over the scanned range."""

    n: int
    w_star: float
    j_star: int
    value: float
    envelope_k1: float
    tail_bound: float
    M: int
    kernel: str

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "w_star": self.w_star,
            "j_star": self.j_star,
            "value": self.value,
            "envelope_k1": self.envelope_k1,
            "tail_bound": self.tail_bound,
            "M": self.M,
            "kernel": self.kernel,
        }


def lower_bound_witness(
    N: int, cfg: SeriesConfig | None = None, config: Config | None = None
) -> WitnessResult:
    """
    Scan w = j/(4√(2N/3)), j odd, over [witness_w_min, witness_w_max].

    At these points every odd harmonic has |sin| = 1.

    Raises:
        DomainError: If N is not divisible by 3
    """
    config = config or DEFAULT_CONFIG
    if N < 3 or N % 3 != 0:
        raise DomainError(f"N must be a positive multiple of 3, got {N}")
    cfg = cfg or SeriesConfig.for_n(N)
    c4 = 4.0 * math.sqrt(2.0 * N / 3.0)

    j_lo = math.ceil(c4 * config.witness_w_min)
    j_lo += 1 - j_lo % 2
    j_hi = math.floor(c4 * config.witness_w_max)
    if j_lo > j_hi:
        raise DomainError(f"no resonant point in [{config.witness_w_min}, {config.witness_w_max}]")

    best_j, best_value = j_lo, -1.0
    for j in range(j_lo, j_hi + 1, 2):
        value = abs(lambda_series(N, j / c4, cfg, resonance=j))
        if value > best_value:
            best_j, best_value = j, value

    w_star = best_j / c4
    result = WitnessResult(
        n=N,
        w_star=w_star,
        j_star=best_j,
        value=best_value,
        envelope_k1=harmonic_envelope(w_star, 1),
        tail_bound=harmonic_tail(w_star),
        M=cfg.M,
        kernel=cfg.kernel.tag,
    )
    log_event(event="witness", n=N, j=best_j, w_star=w_star, value=best_value)
    return result
