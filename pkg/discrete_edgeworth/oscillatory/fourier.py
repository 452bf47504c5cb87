"""Truncated Fourier series of the sawtooth frac(x) − 1/2."""

import math

import numpy as np

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.numerics.special import compensated_sum, sin_2pi


def _tau_one(x: float, k: np.ndarray) -> float:
    terms = sin_2pi(np.mod(k * x, 1.0)) / (k * math.pi)
    return -compensated_sum(terms)


def tau_series(x, K: int):
    """
    −Σ_{k=1}^{K} sin(2πkx)/(kπ).

    Converges to frac(x) − 1/2 at non-integers and to 0 at integers.

    Args:
        x: Nonnegative real or array
        K: Number of harmonics, K >= 1
    """
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError("tau_series needs x >= 0")
    k = np.arange(1, K + 1, dtype=float)
    if arr.ndim == 0:
        return _tau_one(float(arr), k)
    return np.array([_tau_one(float(v), k) for v in arr.ravel()]).reshape(arr.shape)


def tau_matrix(x: np.ndarray, K: int) -> np.ndarray:
    """tau_series for many x at small K, vectorised over (k, x)."""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    x = np.asarray(x, dtype=float)
    k = np.arange(1, K + 1, dtype=float)[:, None]
    terms = sin_2pi(np.mod(k * x[None, :], 1.0)) / (k * math.pi)
    return -terms.sum(axis=0)
