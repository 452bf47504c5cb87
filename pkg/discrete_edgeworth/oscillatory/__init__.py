"""Fourier and theta-function machinery for the oscillating term."""

from discrete_edgeworth.oscillatory.fourier import tau_matrix, tau_series
from discrete_edgeworth.oscillatory.series import (
    FIGURE1_KERNEL,
    UNIT_KERNEL,
    KernelChoice,
    SeriesCheck,
    SeriesConfig,
    WitnessResult,
    custom_kernel,
    fourier_lambda_direct,
    harmonic_envelope,
    harmonic_tail,
    kernel_envelope,
    kernel_from_tag,
    lambda_series,
    lower_bound_witness,
    series_vs_direct,
)
from discrete_edgeworth.oscillatory.theta import (
    PoissonPair,
    ThetaTerm,
    poisson_theta_pair,
    theta_sum_direct,
    theta_term,
)

__all__ = [
    "tau_matrix",
    "tau_series",
    "FIGURE1_KERNEL",
    "UNIT_KERNEL",
    "KernelChoice",
    "SeriesCheck",
    "SeriesConfig",
    "WitnessResult",
    "custom_kernel",
    "fourier_lambda_direct",
    "harmonic_envelope",
    "harmonic_tail",
    "kernel_envelope",
    "kernel_from_tag",
    "lambda_series",
    "lower_bound_witness",
    "series_vs_direct",
    "PoissonPair",
    "ThetaTerm",
    "poisson_theta_pair",
    "theta_sum_direct",
    "theta_term",
]
