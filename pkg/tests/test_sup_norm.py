"""
Tests for the sup-norm engine.
"""

import numpy as np
import pytest

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.evaluation.sup_norm import (
    grid_scan_sup,
    law_cdf_columns,
    sup_distance,
    sup_psi_minus_phi,
)
from discrete_edgeworth.law.exact import build_exact_law


def test_cdf_columns_two_sided():
    """F and F(·−) at atoms and between them."""
    law = build_exact_law(2)
    right, left = law_cdf_columns(law, np.array([-2.0, 0.0, 0.5, 1.0]))
    assert np.allclose(right, [0.0, 6 / 9, 6 / 9, 8 / 9], atol=1e-15)
    assert np.allclose(left, [0.0, 3 / 9, 6 / 9, 6 / 9], atol=1e-15)


def test_n1_against_normal():
    """F₁ = 2/3 just right of 0 while Φ(0) = 1/2."""
    result = sup_distance(build_exact_law(1), "phi")
    assert result.sup >= 1 / 6 - 1e-15
    assert result.upper >= result.sup


def test_matches_dense_grid_scan():
    """N = 12 against a two-sided scan with step 1e-5 on [−6, 6]."""
    law = build_exact_law(12)
    engine = sup_distance(law, "phi").sup
    oracle = grid_scan_sup(law, step=1e-5, w_lim=6.0)
    assert engine >= oracle - 1e-12
    assert engine - oracle <= 5e-6


def test_triangle_inequality():
    """sup|F − Ψ| <= sup|F − Φ| + sup|Ψ − Φ|."""
    for N in (50, 200):
        law = build_exact_law(N)
        f_psi = sup_distance(law, "psi")
        f_phi = sup_distance(law, "phi")
        assert f_psi.sup <= f_phi.upper + sup_psi_minus_phi(N) + 1e-12


def test_expansion_beats_normal():
    """Ψ tracks F much closer than Φ at moderate N."""
    law = build_exact_law(400)
    f_psi = sup_distance(law, "psi")
    f_phi = sup_distance(law, "phi")
    assert f_psi.sup < f_phi.sup / 2
    assert f_psi.upper >= f_psi.sup
    assert f_psi.n_points > 0 and f_psi.argmax >= 0


def test_upper_bound_brackets_sup():
    law = build_exact_law(100)
    result = sup_distance(law, "psi")
    assert result.sup <= result.upper <= result.sup + 0.05
    assert result.n_refined >= 1
    assert result.tail_budget < 1e-12


def test_domain():
    law = build_exact_law(5)
    with pytest.raises(DomainError):
        sup_distance(law, "phi", w_max=4.0)
    with pytest.raises(DomainError):
        sup_distance(law, "gamma")
    with pytest.raises(DomainError):
        grid_scan_sup(law, step=0.0)
