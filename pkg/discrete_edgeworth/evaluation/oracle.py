"""
Brute-force enumeration over all 3^N tuples and the Student-statistic map.
"""

import math
from typing import Any

import numpy as np

from discrete_edgeworth.config import DEFAULT_CONFIG, Config
from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.law.exact import ExactLaw, law_from_keys
from discrete_edgeworth.numerics.keys import reduce_keys


def tuple_sums(N: int) -> tuple[np.ndarray, np.ndarray]:
    """D = ΣX_i and T = ΣX_i² for every tuple in {−1, 0, 1}^N."""
    codes = np.arange(3**N, dtype=np.int64)
    d = np.zeros(3**N, dtype=np.int64)
    t = np.zeros(3**N, dtype=np.int64)
    for _ in range(N):
        digit = codes % 3 - 1
        codes //= 3
        d += digit
        t += digit * digit
    return d, t


def w_keys(d: np.ndarray, t: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Keys of W = d/√t, 0 when t = 0."""
    return reduce_keys(np.sign(d), d * d, t)


def student_keys(N: int, d: np.ndarray, t: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Keys of τ = d√(N−1)/√(Nt − d²).

    τ² = d²(N−1)/(Nt − d²) is rational, so τ is keyed exactly. All-equal
    tuples (Nt = d²) and N = 1 map to 0.
    """
    den = N * t - d * d
    degenerate = (den <= 0) | (N == 1)
    sign = np.where(degenerate, 0, np.sign(d))
    num = np.where(degenerate, 0, d * d * (N - 1))
    return reduce_keys(sign, num, np.where(degenerate, 1, den))


def brute_force_law(N: int, statistic: str = "w", config: Config | None = None) -> ExactLaw:
    """
    Law of W or τ by enumerating all 3^N equally likely tuples.

    Args:
        N: Sample size, 1 <= N <= config.brute_force_max_n
        statistic: "w" or "student_t"

    Raises:
        DomainError: If N is out of range or the statistic is unknown
    """
    config = config or DEFAULT_CONFIG
    if not 1 <= N <= config.brute_force_max_n:
        raise DomainError(
            f"brute force needs 1 <= N <= {config.brute_force_max_n}, got {N}"
        )
    if statistic not in ("w", "student_t"):
        raise DomainError(f"statistic must be 'w' or 'student_t', got {statistic!r}")
    d, t = tuple_sums(N)
    if statistic == "w":
        sign, num, den = w_keys(d, t)
    else:
        sign, num, den = student_keys(N, d, t)
    return law_from_keys(N, sign, num, den, np.ones(len(d)), divisor=3**N)


def student_threshold_map(x: float, N: int, exact: bool = False) -> float:
    """
    Threshold on W matching the threshold x on τ.

    By default returns the relation
        √(N/(N−1))·x/(1 + x²/(N−1))
    so (x, N) = (1, 2) gives √2/2. exact=True inverts τ = W√(N−1)/√(N − W²)
    instead:
        √(N/(N−1))·x/√(1 + x²/(N−1))
    which is the form the tuple-level check needs.

    Raises:
        DomainError: If x < 0 or N < 2
    """
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if N < 2:
        raise DomainError(f"N must be >= 2, got {N}")
    scale = math.sqrt(N / (N - 1))
    q = 1.0 + x * x / (N - 1)
    return scale * x / (math.sqrt(q) if exact else q)


def student_tuple_check(
    N: int, thresholds, exact: bool = True, atol: float = 1e-12
) -> dict[str, Any]:
    """
    Compare {τ <= x} with {W <= map(x)} tuple by tuple.

    A mismatch at a tuple with |W − map(x)| <= atol counts as an atom tie;
    any other mismatch is an exception. All-equal nonzero tuples have zero
    sample variance and are compared as τ = ±∞.
    """
    if N < 2:
        raise DomainError(f"N must be >= 2, got {N}")
    d, t = tuple_sums(N)
    df = d.astype(float)
    w = np.where(t > 0, df / np.sqrt(np.maximum(t, 1)), 0.0)
    den = N * t - d * d
    infinite = np.where(d > 0, np.inf, np.where(d < 0, -np.inf, 0.0))
    tau = np.where(den > 0, df * math.sqrt(N - 1) / np.sqrt(np.maximum(den, 1)), infinite)

    mismatches, exceptions = 0, 0
    for x in thresholds:
        y = student_threshold_map(float(x), N, exact=exact)
        differ = (tau <= x) != (w <= y)
        tie = np.abs(w - y) <= atol * max(1.0, abs(y))
        mismatches += int(differ.sum())
        exceptions += int((differ & ~tie).sum())
    return {
        "n": N,
        "tuples": int(len(d)),
        "thresholds": len(thresholds),
        "mismatches": mismatches,
        "exceptions_off_atoms": exceptions,
    }
