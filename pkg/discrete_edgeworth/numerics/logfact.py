"""
Log-factorial table with a compensated running sum.

Each entry is stored as an unevaluated pair hi + lo. The pair is grown with
an error-free two-sum, so consecutive differences reproduce log(n) to full
double precision even where log(n!) itself is large.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from discrete_edgeworth.errors import DomainError


@dataclass(frozen=True, eq=False)
class LogFactorialTable:
    """log(n!) for 0 <= n <= max_n as hi + lo pairs."""

    max_n: int
    hi: np.ndarray
    lo: np.ndarray

    @classmethod
    def build(cls, max_n: int) -> "LogFactorialTable":
        if max_n < 0:
            raise DomainError(f"max_n must be >= 0, got {max_n}")
        hi = np.zeros(max_n + 1)
        lo = np.zeros(max_n + 1)
        s, c = 0.0, 0.0
        for n in range(1, max_n + 1):
            x = math.log(n)
            t = s + x
            bp = t - s
            c += (s - (t - bp)) + (x - bp)
            s = t
            hi[n] = s
            lo[n] = c
        hi.flags.writeable = False
        lo.flags.writeable = False
        return cls(max_n=max_n, hi=hi, lo=lo)

    @property
    def values(self) -> np.ndarray:
        return self.hi + self.lo

    def _check(self, n) -> np.ndarray:
        arr = np.asarray(n, dtype=np.int64)
        if np.any(arr < 0) or np.any(arr > self.max_n):
            raise DomainError(f"index outside [0, {self.max_n}]")
        return arr

    def log_factorial(self, n):
        """log(n!) for scalar or array n."""
        arr = self._check(n)
        out = self.hi[arr] + self.lo[arr]
        return float(out) if np.ndim(n) == 0 else out

    def log_multinomial(self, total: int, parts) -> np.ndarray:
        """
        log(total! / Π parts_i!) for columns of integer parts.

        Args:
            total: The common total
            parts: Sequence of equally shaped integer arrays summing to total
        """
        self._check(total)
        idx = [self._check(p) for p in parts]
        hi = self.hi[total] - sum(self.hi[i] for i in idx)
        lo = self.lo[total] - sum(self.lo[i] for i in idx)
        return hi + lo

    def log_binomial(self, n, k):
        """log C(n, k)."""
        n_arr = np.asarray(n, dtype=np.int64)
        k_arr = np.asarray(k, dtype=np.int64)
        if np.any(k_arr < 0) or np.any(k_arr > n_arr):
            raise DomainError("binomial index outside [0, n]")
        n_arr = self._check(n_arr)
        hi = self.hi[n_arr] - self.hi[k_arr] - self.hi[n_arr - k_arr]
        lo = self.lo[n_arr] - self.lo[k_arr] - self.lo[n_arr - k_arr]
        out = hi + lo
        return float(out) if np.ndim(n) == 0 and np.ndim(k) == 0 else out


@lru_cache(maxsize=8)
def log_factorials(max_n: int) -> LogFactorialTable:
    """Shared, immutable table up to max_n."""
    return LogFactorialTable.build(max_n)
