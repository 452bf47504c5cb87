"""Special functions, exact keys and accurate summation."""

from discrete_edgeworth.numerics.keys import (
    ZERO_KEY,
    RationalKey,
    compare_keys,
    key_images,
    rational_key,
    reduce_keys,
)
from discrete_edgeworth.numerics.logfact import LogFactorialTable, log_factorials
from discrete_edgeworth.numerics.special import (
    compensated_sum,
    frac,
    std_normal_cdf,
    std_normal_pdf,
    std_normal_sf,
)

__all__ = [
    "ZERO_KEY",
    "RationalKey",
    "compare_keys",
    "key_images",
    "rational_key",
    "reduce_keys",
    "LogFactorialTable",
    "log_factorials",
    "compensated_sum",
    "frac",
    "std_normal_cdf",
    "std_normal_pdf",
    "std_normal_sf",
]
