"""Exact law of the self-normalised sum."""

from discrete_edgeworth.law.exact import (
    ExactLaw,
    LatticePoint,
    SupportAtom,
    build_exact_law,
    cdf,
    cdf_left,
    joint_pmf_asymptotic,
    joint_pmf_exact,
    lattice_points,
    law_from_keys,
    law_moments,
    max_off_origin_mass,
    origin_mass,
    parity_cdf,
    point_mass,
)
from discrete_edgeworth.law.trinomial import (
    central_trinomial_coefficient,
    central_trinomial_mass,
)

__all__ = [
    "ExactLaw",
    "LatticePoint",
    "SupportAtom",
    "build_exact_law",
    "cdf",
    "cdf_left",
    "joint_pmf_asymptotic",
    "joint_pmf_exact",
    "lattice_points",
    "law_from_keys",
    "law_moments",
    "max_off_origin_mass",
    "origin_mass",
    "parity_cdf",
    "point_mass",
    "central_trinomial_coefficient",
    "central_trinomial_mass",
]
