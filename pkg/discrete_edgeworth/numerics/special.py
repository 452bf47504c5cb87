"""
Special functions and accurate summation.

Φ is evaluated through the complementary error function on |x| so that the
two tails share one computation and Φ(−x) = 1 − Φ(x) holds by construction.
"""

import math

import numpy as np
from scipy.special import erfc

from discrete_edgeworth.errors import DomainError

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
_SQRT_HALF = math.sqrt(0.5)


def _scalar_or_array(values: np.ndarray, like) -> float | np.ndarray:
    if np.ndim(like) == 0:
        return float(values)
    return values


def std_normal_cdf(x):
    """
    Standard normal distribution function Φ.

    Args:
        x: Finite real or array of reals

    Returns:
        Φ(x), same shape as the input
    """
    arr = np.asarray(x, dtype=float)
    q = 0.5 * erfc(np.abs(arr) * _SQRT_HALF)
    out = np.where(arr < 0, q, 1.0 - q)
    return _scalar_or_array(out, x)


def std_normal_sf(x):
    """Upper tail 1 − Φ(x) without cancellation."""
    arr = np.asarray(x, dtype=float)
    q = 0.5 * erfc(np.abs(arr) * _SQRT_HALF)
    out = np.where(arr > 0, q, 1.0 - q)
    return _scalar_or_array(out, x)


def std_normal_pdf(x):
    """Standard normal density φ."""
    arr = np.asarray(x, dtype=float)
    out = INV_SQRT_2PI * np.exp(-0.5 * arr * arr)
    return _scalar_or_array(out, x)


def frac(x):
    """
    Fractional part x − ⌊x⌋ for x ≥ 0.

    Values within an ulp of an integer are left as computed.

    Raises:
        DomainError: If any input is negative
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise DomainError(f"frac is defined for x >= 0, got min {float(np.min(arr))}")
    out = arr - np.floor(arr)
    return _scalar_or_array(out, x)


def sin_2pi(phase):
    """
    sin(2π·phase) with exact values on quarter periods.

    The phase is reduced mod 1 first; 0 and 1/2 give 0, 1/4 gives 1 and
    3/4 gives −1 exactly.
    """
    p = np.mod(np.asarray(phase, dtype=float), 1.0)
    out = np.sin(2.0 * np.pi * p)
    out = np.where((p == 0.0) | (p == 0.5), 0.0, out)
    out = np.where(p == 0.25, 1.0, out)
    out = np.where(p == 0.75, -1.0, out)
    return _scalar_or_array(out, phase)


def cos_2pi(phase):
    """cos(2π·phase) after reduction of the phase mod 1."""
    p = np.mod(np.asarray(phase, dtype=float), 1.0)
    out = np.cos(2.0 * np.pi * p)
    out = np.where((p == 0.25) | (p == 0.75), 0.0, out)
    return _scalar_or_array(out, phase)


def compensated_sum(terms) -> float:
    """
    Sum with error-free accumulation (correctly rounded result).

    Args:
        terms: Iterable or array of finite reals

    Returns:
        The float nearest the exact sum; 0.0 for an empty input
    """
    if isinstance(terms, np.ndarray):
        terms = terms.ravel().tolist()
    return math.fsum(terms)
