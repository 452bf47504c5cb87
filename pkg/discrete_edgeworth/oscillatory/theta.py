"""
Gaussian exponential sums and their Poisson duals.

Σ_m exp(−z m² + 2πimb) = √(π/z)·Σ_l exp(−π²(l − b)²/z). With z = 9/N the
dual side collapses to its l = 0 term, which gives the closed form of each
harmonic in the oscillatory series.
"""

import math
from dataclasses import dataclass

import numpy as np

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.numerics.special import compensated_sum, cos_2pi, sin_2pi


@dataclass(frozen=True)
class PoissonPair:
    """Both sides of the summation identity and their truncation radii."""

    z: float
    b: float
    lhs: complex
    rhs: complex
    m_radius: int
    l_radius: int

    @property
    def abs_diff(self) -> float:
        return abs(self.lhs - self.rhs)


@dataclass(frozen=True)
class ThetaTerm:
    """k-th harmonic: Gaussian m-sum and its l = 0 dual term."""

    exact: float
    closed: float
    radius: int

    @property
    def residual(self) -> float:
        return abs(self.exact - self.closed)


def poisson_theta_pair(z: float, b: float, tol: float = 1e-12) -> PoissonPair:
    """
    Evaluate both sides of the Poisson identity.

    Each side is truncated once its first omitted term is below tol/100.

    Raises:
        DomainError: If z <= 0 or tol <= 0
    """
    if z <= 0:
        raise DomainError(f"z must be > 0, got {z}")
    if tol <= 0:
        raise DomainError(f"tol must be > 0, got {tol}")
    cutoff = math.log(100.0 / tol)

    m_radius = math.ceil(math.sqrt(cutoff / z))
    m = np.arange(1, m_radius + 1, dtype=float)
    # odd parts cancel between m and −m
    lhs = 1.0 + 2.0 * compensated_sum(np.exp(-z * m * m) * cos_2pi(m * b))

    scale = math.sqrt(math.pi / z)
    l_radius = math.ceil(math.sqrt(z * max(math.log(100.0 * scale / tol), 1.0)) / math.pi) + 1
    center = math.floor(b + 0.5)
    lv = np.arange(center - l_radius, center + l_radius + 1, dtype=float)
    gap = lv - b
    rhs = scale * compensated_sum(np.exp(-(math.pi**2) * gap * gap / z))

    return PoissonPair(
        z=z, b=b, lhs=complex(lhs, 0.0), rhs=complex(rhs, 0.0),
        m_radius=m_radius, l_radius=l_radius,
    )


def _check_harmonic(N: int, k: int, w: float) -> None:
    if N < 3:
        raise DomainError(f"N must be >= 3, got {N}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if w <= 0:
        raise DomainError(f"w must be > 0, got {w}")


def theta_term(N: int, k: int, w: float, config: Config | None = None) -> ThetaTerm:
    """
    k-th harmonic of the oscillation at w.

    exact  = (3/√(πN))·Σ_m exp(−9m²/N)·sin(d₀ + 2πd₁m)
    closed = exp(−π²k²w²/6)·sin(d₀)

    with d₀ = 2πkw√(2N/3) and d₁ = kw√(3/2)/√N. The m-sum is taken in ±m
    pairs, sin(d₀ + a) + sin(d₀ − a) = 2 sin d₀ cos a, and one sin(d₀) value
    is shared by both sides.
    """
    config = config or DEFAULT_CONFIG
    _check_harmonic(N, k, w)
    prefactor = 3.0 / math.sqrt(math.pi * N)
    s0 = sin_2pi(k * w * math.sqrt(2.0 * N / 3.0))
    d1 = k * w * math.sqrt(1.5) / math.sqrt(N)

    radius = math.ceil(math.sqrt(N * max(math.log(prefactor / config.theta_term_floor), 0.0) / 9.0))
    m = np.arange(1, radius + 1, dtype=float)
    paired = 1.0 + 2.0 * compensated_sum(np.exp(-9.0 * m * m / N) * cos_2pi(d1 * m))

    exact = s0 * prefactor * paired
    closed = s0 * math.exp(-(math.pi**2) * k * k * w * w / 6.0)
    return ThetaTerm(exact=exact, closed=closed, radius=radius)


def theta_sum_direct(N: int, k: int, w: float) -> float:
    """(3/√(πN))·Σ_{0<=n<=N} exp(−9ñ²/N)·sin(2πkw√(2n)), ñ = n − N/3."""
    _check_harmonic(N, k, w)
    n = np.arange(N + 1, dtype=float)
    nt = n - N / 3.0
    terms = np.exp(-9.0 * nt * nt / N) * sin_2pi(k * w * np.sqrt(2.0 * n))
    return 3.0 / math.sqrt(math.pi * N) * compensated_sum(terms)
