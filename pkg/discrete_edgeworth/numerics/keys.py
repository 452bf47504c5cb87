"""
Exact keys for support points of the form sign·√(num/den).

A value d/√t is stored as (signum(d), d², t) reduced by their gcd, so two
lattice points land on the same key iff they give the same real number.
"""

from dataclasses import dataclass
from functools import total_ordering
from math import gcd, sqrt

import numpy as np

from discrete_edgeworth.errors import DomainError


@total_ordering
@dataclass(frozen=True)
class RationalKey:
    """Exact representation of sign·√(num/den)."""

    sign: int
    num: int
    den: int

    def __post_init__(self):
        if self.den < 1:
            raise DomainError(f"key denominator must be >= 1, got {self.den}")
        if (self.sign == 0) != (self.num == 0):
            raise DomainError(f"sign {self.sign} inconsistent with num {self.num}")
        if gcd(self.num, self.den) != 1:
            raise DomainError(f"key ({self.num}, {self.den}) is not reduced")

    def __lt__(self, other: "RationalKey") -> bool:
        return compare_keys(self, other) < 0

    def to_float(self) -> float:
        """Float image; equal keys always give equal floats."""
        if self.num == 0:
            return 0.0
        return self.sign * sqrt(self.num / self.den)

    @classmethod
    def from_square(cls, sign: int, num: int, den: int) -> "RationalKey":
        """Build a reduced key for sign·√(num/den)."""
        if den <= 0:
            raise DomainError(f"denominator must be positive, got {den}")
        if num == 0 or sign == 0:
            return ZERO_KEY
        g = gcd(num, den)
        return cls(1 if sign > 0 else -1, num // g, den // g)


ZERO_KEY = RationalKey(0, 0, 1)


def rational_key(d: int, t: int) -> RationalKey:
    """
    Exact key of the value d/√t.

    Args:
        d: Signed integer numerator
        t: Positive integer

    Raises:
        DomainError: If t <= 0
    """
    if t <= 0:
        raise DomainError(f"t must be a positive integer, got {t}")
    d = int(d)
    sign = (d > 0) - (d < 0)
    return RationalKey.from_square(sign, d * d, int(t))


def compare_keys(a: RationalKey, b: RationalKey) -> int:
    """
    Total order on keys consistent with their real values.

    Returns:
        -1, 0 or 1 as a <, =, > b
    """
    if a.sign != b.sign:
        return -1 if a.sign < b.sign else 1
    if a.sign == 0:
        return 0
    lhs = a.num * b.den
    rhs = b.num * a.den
    if lhs == rhs:
        return 0
    magnitude = -1 if lhs < rhs else 1
    return magnitude if a.sign > 0 else -magnitude


def reduce_keys(
    sign: np.ndarray, num: np.ndarray, den: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorised key reduction on int64 arrays.

    Zero numerators map to the zero key (0, 0, 1) whatever the denominator.
    """
    sign = np.asarray(sign, dtype=np.int64)
    num = np.asarray(num, dtype=np.int64)
    den = np.asarray(den, dtype=np.int64)
    zero = (num == 0) | (sign == 0)
    g = np.gcd(num, den)
    g = np.where(g == 0, 1, g)
    r_num = np.where(zero, 0, num // g)
    r_den = np.where(zero, 1, den // g)
    r_sign = np.where(zero, 0, np.sign(sign))
    return r_sign.astype(np.int64), r_num.astype(np.int64), r_den.astype(np.int64)


def key_images(sign: np.ndarray, num: np.ndarray, den: np.ndarray) -> np.ndarray:
    """Float images of reduced keys, computed the same way as RationalKey.to_float."""
    num = np.asarray(num, dtype=np.int64)
    den = np.asarray(den, dtype=np.int64)
    return np.asarray(sign, dtype=float) * np.sqrt(num / den)


def assert_strictly_increasing(
    sign: np.ndarray, num: np.ndarray, den: np.ndarray
) -> None:
    """
    Check exactly that consecutive keys are strictly increasing.

    Cross products are formed in int64; callers keep num·den below 2**63.
    """
    if len(sign) < 2:
        return
    s0, s1 = sign[:-1], sign[1:]
    cross_lo = num[:-1] * den[1:]
    cross_hi = num[1:] * den[:-1]
    same = s0 == s1
    ok = np.where(
        same,
        np.where(s0 > 0, cross_lo < cross_hi, np.where(s0 < 0, cross_lo > cross_hi, False)),
        s0 < s1,
    )
    if not bool(np.all(ok)):
        bad = int(np.argmin(ok))
        raise DomainError(f"keys out of order at position {bad}")
