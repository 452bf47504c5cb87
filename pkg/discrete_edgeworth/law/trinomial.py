"""Closed-form origin mass from central trinomial coefficients."""

from fractions import Fraction
from math import comb

from discrete_edgeworth.errors import DomainError


def central_trinomial_coefficient(N: int) -> int:
    """Coefficient of x^N in (1 + x + x²)^N."""
    if N < 0:
        raise DomainError(f"N must be >= 0, got {N}")
    return sum(comb(N, 2 * k) * comb(2 * k, k) for k in range(N // 2 + 1))


def central_trinomial_mass(N: int) -> float:
    """
    P(D = 0) = P(W = 0) in exact integer arithmetic.

    Raises:
        DomainError: If N < 1
    """
    if N < 1:
        raise DomainError(f"N must be >= 1, got {N}")
    return float(Fraction(central_trinomial_coefficient(N), 3**N))
