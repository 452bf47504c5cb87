"""
Tests for the Fourier sawtooth, the Poisson/theta machinery and λ.
"""

import math

import numpy as np
import pytest

from discrete_edgeworth.errors import DomainError
from discrete_edgeworth.numerics.special import std_normal_pdf
from discrete_edgeworth.oscillatory.fourier import tau_matrix, tau_series
from discrete_edgeworth.oscillatory.series import (
    FIGURE1_KERNEL,
    UNIT_KERNEL,
    SeriesConfig,
    custom_kernel,
    harmonic_envelope,
    harmonic_tail,
    kernel_envelope,
    kernel_from_tag,
    lambda_series,
    lower_bound_witness,
    series_vs_direct,
)
from discrete_edgeworth.oscillatory.theta import (
    poisson_theta_pair,
    theta_sum_direct,
    theta_term,
)


class TestSawtooth:
    """−Σ sin(2πkx)/(kπ) against frac(x) − 1/2."""

    def test_exact_zeros(self):
        assert abs(tau_series(0.5, 50)) < 1e-12
        assert abs(tau_series(2.0, 10**5)) < 1e-12

    def test_quarter(self):
        assert abs(tau_series(0.25, 10**5) + 0.25) < 2e-5

    def test_convergence_rate(self):
        """One constant C gives |error| <= C/(K·dist(x, Z)) for every K."""
        rng = np.random.default_rng(5)
        xs = rng.uniform(0, 10, size=200)
        xs = xs[np.abs(xs - np.round(xs)) > 1e-3][:100]
        assert len(xs) == 100
        scaled = {}
        for K in (10**3, 10**4, 10**5):
            dist = np.abs(xs - np.round(xs))
            err = np.abs(tau_series(xs, K) - (xs - np.floor(xs) - 0.5))
            scaled[K] = err * K * dist
        c = max(s.max() for s in scaled.values())
        # Abel summation bounds the tail by 1/(π(K + 1)·2·dist)
        assert 0.01 < c <= 1 / (2 * math.pi) + 1e-3
        for K, s in scaled.items():
            assert np.all(s <= c), K

    def test_matrix_matches_series(self):
        x = np.array([0.1, 0.77, 3.3, 12.05])
        assert np.allclose(tau_matrix(x, 8), tau_series(x, 8), atol=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            tau_series(-1.0, 10)
        with pytest.raises(DomainError):
            tau_series(1.0, 0)


class TestPoisson:
    """Σ_m e^{−zm²+2πimb} = √(π/z)·Σ_l e^{−π²(l−b)²/z}."""

    def test_self_dual_point(self):
        pair = poisson_theta_pair(math.pi, 0.0)
        assert abs(pair.lhs.real - 1.0864348) < 1e-7
        assert abs(pair.rhs.real - 1.0864348) < 1e-7
        assert pair.abs_diff <= 1e-12

    def test_theta_scale(self):
        pair = poisson_theta_pair(9 / 300, 0.2)
        assert pair.abs_diff <= 1e-12
        assert pair.lhs.imag == 0.0

    def test_periodic_in_b(self):
        a = poisson_theta_pair(0.7, 0.3)
        b = poisson_theta_pair(0.7, 1.3)
        assert abs(a.lhs - b.lhs) < 1e-12
        assert abs(a.rhs - b.rhs) < 1e-12

    def test_random_pairs(self):
        rng = np.random.default_rng(7)
        zs = np.exp(rng.uniform(math.log(1e-3), math.log(10.0), size=100))
        bs = rng.uniform(0, 1, size=100)
        for z, b in zip(zs, bs):
            pair = poisson_theta_pair(float(z), float(b))
            assert pair.abs_diff <= 1e-12, f"z={z}, b={b}"
            assert pair.m_radius >= 1 and pair.l_radius >= 1

    def test_domain(self):
        with pytest.raises(DomainError):
            poisson_theta_pair(0.0, 0.1)
        with pytest.raises(DomainError):
            poisson_theta_pair(1.0, 0.1, tol=0.0)


class TestThetaTerm:
    def test_gaussian_damping(self):
        term = theta_term(300, 1, 6.0)
        assert abs(term.closed) < 1e-25
        assert abs(term.exact) <= 1e-14

    def test_residual_small(self):
        assert theta_term(3000, 1, 1.0).residual <= 0.05

    def test_residual_decreases_with_n(self):
        def worst(N):
            K = math.floor(math.log(N))
            return max(
                theta_term(N, k, w).residual for k in range(1, K + 1) for w in (0.5, 1.0, 2.0)
            )

        r300, r1000, r3000 = worst(300), worst(1000), worst(3000)
        assert r1000 <= r300
        assert r3000 <= max(r1000, 1e-14)
        assert r3000 < r300 / 2

    def test_direct_sum_close_to_closed_form(self):
        for N in (300, 3000):
            direct = theta_sum_direct(N, 1, 1.0)
            closed = theta_term(N, 1, 1.0).closed
            assert abs(direct - closed) <= 0.05

    def test_domain(self):
        with pytest.raises(DomainError):
            theta_term(2, 1, 1.0)
        with pytest.raises(DomainError):
            theta_term(300, 0, 1.0)
        with pytest.raises(DomainError):
            theta_sum_direct(300, 1, 0.0)


class TestKernels:
    def test_ranges(self):
        k = np.arange(1, 11)
        assert np.all(UNIT_KERNEL(k, 10) == 1.0)
        f = FIGURE1_KERNEL(k, 10)
        assert np.all((f > 0) & (f <= 1))
        assert abs(f[-1] - math.exp(-1)) < 1e-15

    def test_custom_out_of_range(self):
        bad = custom_kernel(lambda k, M: 2.0 * np.ones_like(k, dtype=float))
        with pytest.raises(DomainError):
            bad(np.arange(1, 4), 3)

    def test_tags(self):
        assert kernel_from_tag("figure1") is FIGURE1_KERNEL
        with pytest.raises(DomainError):
            kernel_from_tag("gauss")

    def test_series_config(self):
        assert SeriesConfig.for_n(100).M == 4
        with pytest.raises(DomainError):
            SeriesConfig(0)


class TestLambdaSeries:
    def test_even_resonance_is_zero(self):
        N = 300
        c = math.sqrt(2 * N / 3)
        cfg = SeriesConfig.for_n(N)
        assert lambda_series(N, 2 / (4 * c), cfg, resonance=2) == 0.0
        assert lambda_series(N, 6 / (4 * c), cfg, resonance=6) == 0.0

    def test_resonance_matches_float_phases(self):
        N = 300
        c = math.sqrt(2 * N / 3)
        cfg = SeriesConfig.for_n(N)
        w = 5 / (4 * c)
        assert abs(lambda_series(N, w, cfg, resonance=5) - lambda_series(N, w, cfg)) < 1e-12

    def test_figure1_curve(self):
        """Oscillating curve inside its envelope."""
        cfg = SeriesConfig(10, FIGURE1_KERNEL)
        ws = np.arange(0.05, 2.34 + 1e-12, 1e-3)
        values = lambda_series(100, ws, cfg)
        envelope = kernel_envelope(ws, 10, FIGURE1_KERNEL)
        assert np.all(np.abs(values) <= envelope + 1e-15)
        signs = np.sign(values)
        signs = signs[signs != 0]
        assert int(np.sum(signs[1:] != signs[:-1])) >= 20

    def test_first_harmonic_dominates(self):
        N = 300
        cfg = SeriesConfig.for_n(N)
        for w in (1.0, 1.5, 2.5):
            first = lambda_series(N, w, SeriesConfig(1))
            rest = lambda_series(N, w, cfg) - first
            assert abs(rest) <= harmonic_tail(w) + 1e-15
            assert abs(rest) < 0.02 * std_normal_pdf(w)
            assert abs(first) <= harmonic_envelope(w, 1) * (1 + 1e-12)

    def test_scalar_and_array(self):
        cfg = SeriesConfig.for_n(300)
        arr = lambda_series(300, np.array([0.4, 1.1]), cfg)
        assert arr.shape == (2,)
        assert abs(arr[1] - lambda_series(300, 1.1, cfg)) < 1e-15

    def test_domain(self):
        cfg = SeriesConfig(3)
        with pytest.raises(DomainError):
            lambda_series(2, 1.0, cfg)
        with pytest.raises(DomainError):
            lambda_series(300, 0.0, cfg)

    def test_agrees_with_direct_form(self):
        """Closed-form series and direct n-sum differ by at most the theta residuals."""
        for w in (0.5, 1.0, 2.0):
            check = series_vs_direct(300, w)
            assert check.gap <= check.residual_bound + 1e-12
            assert len(check.per_k_residual) == math.floor(math.log(300))

    def test_gap_within_phase_bound(self):
        """The tangent-line phase error bounds the gap and shrinks like M/√N."""
        coarse = series_vs_direct(300, 1.0)
        fine = series_vs_direct(3000, 1.0)
        for check in (coarse, fine):
            assert check.gap <= check.phase_bound + 1e-12
        assert len(fine.per_k_residual) == 8
        assert fine.phase_bound < 0.6 * coarse.phase_bound
        assert fine.gap < 0.1


class TestWitness:
    def test_n300(self):
        result = lower_bound_witness(300)
        assert result.j_star % 2 == 1
        assert 1.0 <= result.w_star <= 3.0
        assert result.value >= 0.9 * result.envelope_k1 - result.tail_bound > 0
        assert result.kernel == "unit"
        assert set(result.to_dict()) >= {"n", "w_star", "j_star", "value"}

    def test_envelope_independent_of_n(self):
        a = lower_bound_witness(300)
        assert harmonic_envelope(a.w_star, 1) == a.envelope_k1

    def test_requires_multiple_of_three(self):
        with pytest.raises(DomainError):
            lower_bound_witness(301)
