"""
Tests for the expansion Ψ = Φ + N^{-1/2}Λ and its jumps.
"""

import math

import numpy as np
import pytest

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.evaluation.metrics import monotonicity_defect
from discrete_edgeworth.expansion.breakpoints import breakpoint_table, breakpoints
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
from discrete_edgeworth.expansion.weights import theta_weights
from discrete_edgeworth.numerics.special import std_normal_cdf


def _lambda_reference(N: int, w: float) -> float:
    """Two-loop Λ in plain Python."""
    total = 0.0
    for n in range(N + 1):
        theta = 3 / math.sqrt(math.pi * N) * math.exp(-9 * (n - N / 3) ** 2 / N)
        x = w * math.sqrt(2 * n)
        total += theta * (x - math.floor(x) - 0.5)
    return -math.sqrt(1.5) * math.exp(-w * w / 2) / math.sqrt(2 * math.pi) * total


class TestWeights:
    def test_sum_and_shape(self):
        for N in (50, 500):
            weights = theta_weights(N)
            assert abs(weights.total - 1.0) < 1e-6
            assert np.all(np.isfinite(weights.log_weights))
            assert np.all(weights.weights >= 0)
            assert abs(int(np.argmax(weights.weights)) - N / 3) <= 1

    def test_log_form_survives_underflow(self):
        """Far from N/3 the weight rounds to 0 but its log stays finite."""
        weights = theta_weights(500)
        assert np.any(weights.weights == 0)
        assert np.all(np.isfinite(weights.log_weights))
        assert weights.log_weights[0] == pytest.approx(
            math.log(3 / math.sqrt(500 * math.pi)) - 9 * (500 / 3) ** 2 / 500
        )
        big = weights.weights > 1e-300
        assert np.allclose(np.log(weights.weights[big]), weights.log_weights[big], rtol=0, atol=1e-12)

    def test_window(self):
        weights = theta_weights(900)
        n = weights.window(7.0)
        assert n.min() == 90 and n.max() == 510

    def test_domain(self):
        with pytest.raises(DomainError):
            theta_weights(0)


class TestLambda:
    def test_origin_value(self):
        """frac(0) = 0 makes every term −1/2."""
        value = lambda_capital(100, 0.0)
        assert abs(value - 0.24430) < 1e-5
        expected = math.sqrt(1.5) / math.sqrt(2 * math.pi) / 2 * theta_weights(100).total
        assert abs(value - expected) < 1e-15

    def test_matches_reference_loop(self):
        for w in (0.3, 1.0, 2.2):
            assert abs(lambda_capital(100, w) - _lambda_reference(100, w)) < 1e-12

    def test_windowed_matches_full(self):
        for w in (0.4, 1.3):
            full = lambda_capital(2000, w)
            windowed = lambda_capital(2000, w, windowed=True)
            assert abs(full - windowed) < 1e-14

    def test_uniform_bound(self):
        """|N^{-1/2}Λ| <= √(3/(8N))·φ(0)·S everywhere."""
        for N in (50, 500):
            weights = theta_weights(N)
            ws = np.linspace(0, 8, 100_001)
            table = breakpoint_table(N, 8.0, weights)
            scaled = np.abs(lambda_grid(N, ws, table, weights)) / math.sqrt(N)
            bound = math.sqrt(3 / (8 * N)) / math.sqrt(2 * math.pi) * weights.total
            assert scaled.max() <= bound * (1 + 1e-12)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            lambda_capital(100, -0.1)


class TestPsi:
    def test_far_tail(self):
        assert abs(psi(300, 8.0) - 1.0) < 1e-6
        assert abs(psi(300, -8.0)) < 1e-6

    def test_origin_jump(self):
        jump = psi(100, 0.0) - psi_left(100, 0.0)
        assert abs(jump / math.sqrt(3 / (400 * math.pi)) - 1) <= 0.10

    def test_reflection(self):
        assert psi(100, -0.37) + psi_left(100, 0.37) == 1.0

    def test_grid_matches_pointwise(self):
        N = 300
        weights = theta_weights(N)
        table = breakpoint_table(N, 4.0, weights)
        rng = np.random.default_rng(3)
        ws = rng.uniform(-4, 4, size=200)
        right, left = psi_grid(N, ws, table, weights)
        for w, r, l in zip(ws, right, left):
            assert abs(r - psi(N, float(w), weights)) < 1e-11
            assert abs(l - psi_left(N, float(w), weights)) < 1e-11

    def test_jumps_match_table(self):
        """Ψ − Ψ(·−) at each breakpoint equals its tabulated jump."""
        N = 300
        weights = theta_weights(N)
        table = breakpoint_table(N, 3.0, weights)
        right, left = psi_grid(N, table.loc, table, weights)
        assert np.max(np.abs((right - left) - table.jump)) < 1e-12

        for bp in list(table)[::97]:
            diff = psi(N, bp, weights) - psi_left(N, bp, weights)
            assert abs(diff - bp.jump) < 1e-12
            assert abs(psi(N, bp, weights) - psi_grid(N, [bp.w_loc], table, weights)[0][0]) < 1e-11

    def test_lipschitz_between_jumps(self):
        N = 300
        weights = theta_weights(N)
        table = breakpoint_table(N, 4.0, weights)
        lip = derivative_bound(N, weights)
        rng = np.random.default_rng(4)
        delta = 1e-8
        checked = 0
        for w in rng.uniform(0.01, 3.9, size=400):
            i = np.searchsorted(table.loc, w, side="right")
            if i < len(table) and table.loc[i] <= w + 2 * delta:
                continue
            step = abs(psi(N, w + delta, weights) - psi(N, w, weights))
            assert step <= lip * delta + 1e-13
            checked += 1
        assert checked > 300

    def test_nearly_monotone_at_large_n(self):
        N = 1000
        ws = np.linspace(-8, 8, 10_000)
        right, _ = psi_grid(N, ws, breakpoint_table(N, 8.0))
        assert monotonicity_defect(right) <= 1 / N

    def test_wrong_weights_rejected(self):
        with pytest.raises(DomainError):
            psi(100, 0.5, theta_weights(50))


class TestOriginJumpClosedForm:
    def test_values(self):
        assert abs(origin_jump(100) - 0.04886025) < 1e-8
        assert abs(origin_jump(400) - origin_jump(100) / 2) < 1e-16
        assert abs(origin_jump(3) - math.sqrt(1 / (4 * math.pi))) < 1e-15

    def test_domain(self):
        with pytest.raises(DomainError):
            origin_jump(0)


class TestBreakpoints:
    def test_n1(self):
        locs = [bp.w_loc for bp in breakpoints(1, 1.5)]
        assert len(locs) == 2
        assert abs(locs[0] - 1 / math.sqrt(2)) < 1e-15
        assert abs(locs[1] - math.sqrt(2)) < 1e-15

    def test_merging(self):
        """k²/(2n) = 1/2 for (1, 1) and (4, 2)."""
        first = breakpoints(8, 1.0)
        at_half = [bp for bp in first if bp.key.num == 1 and bp.key.den == 2]
        assert len(at_half) == 1
        assert at_half[0].members == ((1, 1), (4, 2))
        assert (at_half[0].n, at_half[0].k) == (1, 1)

    def test_sorted_positive_and_small(self):
        N = 300
        table = breakpoint_table(N, 3.0)
        assert np.all(np.diff(table.loc) > 0)
        assert np.all(np.isfinite(table.log_jump))
        assert np.all(table.jump >= 0)
        assert table.loc.max() <= 3.0
        assert table.jump.max() * N < 5
        assert int(table.member_offsets[-1]) == len(table.member_n)

    def test_log_jump_matches_jump(self):
        N = 300
        table = breakpoint_table(N, 3.0)
        assert np.any(table.jump == 0)
        big = table.jump > 1e-250
        assert np.allclose(np.log(table.jump[big]), table.log_jump[big], rtol=0, atol=1e-9)
        bp = table.breakpoint(len(table) - 1)
        assert bp.log_jump == table.log_jump[-1]
        assert math.isfinite(bp.log_jump)

    def test_domain(self):
        with pytest.raises(DomainError):
            breakpoint_table(10, 0.0)


def test_parity_expansions_add_up():
    """Even plus odd parts give Φ − 1/2 − ½·jump + N^{-1/2}Λ."""
    N, w = 99, 0.83
    total = parity_expansion(N, w, "even") + parity_expansion(N, w, "odd")
    expected = std_normal_cdf(w) - 0.5 - 0.5 * origin_jump(N) + lambda_capital(N, w) / math.sqrt(N)
    assert abs(total - expected) < 1e-12
    with pytest.raises(DomainError):
        parity_expansion(N, w, "neither")
