"""The expansion Ψ, its jump set and parity split."""

from discrete_edgeworth.expansion.breakpoints import (
    BreakpointTable,
    ExpansionBreakpoint,
    breakpoint_table,
    breakpoints,
)
from discrete_edgeworth.expansion.parity import parity_expansion
from discrete_edgeworth.expansion.psi import (
    derivative_bound,
    lambda_capital,
    lambda_grid,
    origin_jump,
    psi,
    psi_grid,
    psi_left,
)
from discrete_edgeworth.expansion.weights import ThetaWeights, theta_weights

__all__ = [
    "BreakpointTable",
    "ExpansionBreakpoint",
    "breakpoint_table",
    "breakpoints",
    "parity_expansion",
    "derivative_bound",
    "lambda_capital",
    "lambda_grid",
    "origin_jump",
    "psi",
    "psi_grid",
    "psi_left",
    "ThetaWeights",
    "theta_weights",
]
