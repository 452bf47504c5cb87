"""
Tests for rate fits, trend checks and interval masses.
"""

import numpy as np
import pytest

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.evaluation.metrics import (
    fit_loglog,
    interval_mass,
    max_interval_mass,
    monotonicity_defect,
    psi_interval_mass,
    trend_check,
)
from discrete_edgeworth.law.exact import build_exact_law


def _rows(values):
    ns = [48 * 2**j for j in range(len(values))]
    return [{"N": n, "value": v(n)} for n, v in zip(ns, values)]


def test_fit_exact_power_laws():
    """Synthetic C·N^p rows recover p exactly."""
    rows = _rows([lambda n: 7 / n] * 5)
    fit = fit_loglog(rows, "value")
    assert abs(fit.slope + 1) < 1e-12
    assert abs(fit.r_squared - 1) < 1e-12
    assert abs(fit.intercept - np.log(7)) < 1e-12

    rows = _rows([lambda n: 3 / np.sqrt(n)] * 4)
    assert abs(fit_loglog(rows, "value").slope + 0.5) < 1e-12


def test_fit_reports_residuals():
    rows = [{"N": n, "value": v} for n, v in [(10, 1.0), (100, 0.2), (1000, 0.01)]]
    fit = fit_loglog(rows, "value")
    assert fit.residual_max > 0
    assert set(fit.to_dict()) == {"column", "slope", "intercept", "r_squared", "residual_max"}


def test_fit_rejects_bad_input():
    with pytest.raises(DomainError):
        fit_loglog(_rows([lambda n: 1 / n] * 2), "value")
    with pytest.raises(DomainError):
        fit_loglog([{"N": 10, "value": 0.0}, {"N": 20, "value": 1.0}, {"N": 40, "value": 1.0}], "value")


def test_trend_check():
    ns = [48, 96, 192, 384, 768]
    up = trend_check([1, 2, 3, 4, 5], ns)
    assert up["rho"] == pytest.approx(1.0)
    assert not up["no_trend"] and not up["no_increasing_trend"]

    down = trend_check([5, 4, 3, 2, 1], ns)
    assert down["rho"] == pytest.approx(-1.0)
    assert down["no_increasing_trend"] and not down["no_trend"]

    flat = trend_check([1.0, 1.2, 0.9, 1.1, 1.0], ns)
    assert flat["no_trend"]
    assert flat["ratio"] == pytest.approx(1.2 / 0.9)

    assert "error" in trend_check([1.0, 2.0], ns[:2])


def test_interval_mass():
    law = build_exact_law(2)
    assert abs(interval_mass(law, 1.0, 1.0) - 2 / 9) < 1e-15
    assert abs(interval_mass(law, -1.0, 1.0) - 7 / 9) < 1e-15
    with pytest.raises(DomainError):
        interval_mass(law, 1.0, 0.5)


def test_short_intervals_carry_order_one_over_n():
    """Random closed intervals of length 1/N inside [0.1, 3]."""
    N = 300
    f_side = max_interval_mass(build_exact_law(N), 1 / N, 0.1, 3.0, trials=1000, seed=7)
    psi_side = max_interval_mass(N, 1 / N, 0.1, 3.0, trials=1000, seed=7)
    assert f_side["c_hat"] < 20
    assert psi_side["c_hat"] < 20
    assert 0.1 <= f_side["argmax_a"] <= 3.0
    assert f_side["trials"] == 1000

    a = psi_side["argmax_a"]
    assert abs(psi_interval_mass(N, a, a + 1 / N) - psi_side["max_mass"]) < 1e-10


def test_interval_must_fit():
    with pytest.raises(DomainError):
        max_interval_mass(100, 1.0, 0.0, 0.5)


def test_monotonicity_defect():
    assert monotonicity_defect([1.0, 2.0, 1.5, 3.0]) == 0.5
    assert monotonicity_defect([0.0, 1.0]) == 0.0
    assert monotonicity_defect([]) == 0.0
