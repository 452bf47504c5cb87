"""Verification harness: sup-norm engine, rate fits and oracles."""

from discrete_edgeworth.evaluation.harness import (
    ScalingRow,
    VerificationHarness,
    compute_row,
    scaling_sweep,
)
from discrete_edgeworth.evaluation.metrics import (
    FitResult,
    fit_loglog,
    interval_mass,
    max_interval_mass,
    monotonicity_defect,
    psi_interval_mass,
    trend_check,
)
from discrete_edgeworth.evaluation.oracle import (
    brute_force_law,
    student_threshold_map,
    student_tuple_check,
    tuple_sums,
)
from discrete_edgeworth.evaluation.sup_norm import (
    SupResult,
    grid_scan_sup,
    law_cdf_columns,
    sup_distance,
    sup_psi_minus_phi,
)
from discrete_edgeworth.export import SCALING_COLUMNS

__all__ = [
    "SCALING_COLUMNS",
    "ScalingRow",
    "VerificationHarness",
    "compute_row",
    "scaling_sweep",
    "FitResult",
    "fit_loglog",
    "interval_mass",
    "max_interval_mass",
    "monotonicity_defect",
    "psi_interval_mass",
    "trend_check",
    "brute_force_law",
    "student_threshold_map",
    "student_tuple_check",
    "tuple_sums",
    "SupResult",
    "grid_scan_sup",
    "law_cdf_columns",
    "sup_distance",
    "sup_psi_minus_phi",
]
