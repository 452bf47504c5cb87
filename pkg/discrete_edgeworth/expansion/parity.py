"""Separate expansions for even and odd counts of nonzero draws."""

import math

import numpy as np

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.expansion.weights import ThetaWeights, theta_weights
from discrete_edgeworth.numerics.special import (
    compensated_sum,
    std_normal_cdf,
    std_normal_pdf,
)


def parity_expansion(
    N: int, w: float, parity: str, weights: ThetaWeights | None = None
) -> float:
    """
    Expansion of P(0 < W <= w, T even) or P(0 < W <= w, T odd).

    even: ½(Φ − ½ − √(3/(4πN))) − √(3/(2N))·φ·Σ θ_n (frac(w√(n/2)) − ½)
    odd:  ½(Φ − ½) − √(3/(2N))·φ·Σ θ_n (frac(w√(n/2) + ½) − ½)

    The two add up to Φ − ½ − ½√(3/(4πN)) + N^{−1/2}Λ(w).
    """
    if parity not in ("even", "odd"):
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    if w < 0:
        raise DomainError(f"w must be >= 0, got {w}")
    weights = weights or theta_weights(N)

    x = w * weights.root_2n / 2.0
    if parity == "odd":
        x = x + 0.5
    fr = x - np.floor(x)
    osc = compensated_sum(weights.weights * (fr - 0.5))

    head = std_normal_cdf(w) - 0.5
    if parity == "even":
        head -= math.sqrt(3.0 / (4.0 * math.pi * N))
    return 0.5 * head - math.sqrt(3.0 / (2.0 * N)) * std_normal_pdf(w) * osc
