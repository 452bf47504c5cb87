"""
Gaussian weights over the count of nonzero draws.

θ_n = (3/√(πN))·exp(−(9/N)(n − N/3)²) for 0 <= n <= N. The weights sum to 1
up to exponentially small terms. Far from N/3 the float value underflows to
0, so log θ_n is kept alongside and is finite for every n.
"""

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.numerics.special import compensated_sum


@dataclass(frozen=True, eq=False)
class ThetaWeights:
    """θ_n and log θ_n for n = 0..N."""

    n_total: int
    log_weights: np.ndarray

    @cached_property
    def weights(self) -> np.ndarray:
        w = np.exp(self.log_weights)
        w.flags.writeable = False
        return w

    @cached_property
    def total(self) -> float:
        """S = Σ θ_n."""
        return compensated_sum(self.weights)

    @cached_property
    def slope_sum(self) -> float:
        """A = Σ θ_n √(2n), the slope of Σ θ_n·w√(2n) in w."""
        return compensated_sum(self.weights * self.root_2n)

    @cached_property
    def root_2n(self) -> np.ndarray:
        return np.sqrt(2.0 * np.arange(self.n_total + 1))

    def window(self, sigmas: float) -> np.ndarray:
        """Indices n with |n − N/3| <= sigmas·√N."""
        N = self.n_total
        n = np.arange(N + 1)
        return n[np.abs(n - N / 3.0) <= sigmas * math.sqrt(N)]


@lru_cache(maxsize=32)
def theta_weights(N: int) -> ThetaWeights:
    """
    Build (and cache) the weights for sample size N.

    Raises:
        DomainError: If N < 1
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    n = np.arange(N + 1, dtype=float)
    nt = n - N / 3.0
    log_w = math.log(3.0 / math.sqrt(math.pi * N)) - 9.0 * nt * nt / N
    log_w.flags.writeable = False
    return ThetaWeights(n_total=N, log_weights=log_w)
