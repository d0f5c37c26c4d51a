"""Tests for the sufficient-condition thresholds and the double-integral construction."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gftlab.exceptions import DomainError
from gftlab.schemas.reports import ClassParams, DiskGrid, Variant
from gftlab.services.analytic_core import polynomial_map
from gftlab.services.sufficiency import (
    build_double_integral_fn,
    check_sufficient_condition,
    condition_values,
    delta_threshold,
    modulus_bounds,
    run_sufficiency_suite,
    sample_members,
    thm2_threshold,
    threshold_quadratic,
)

DELTA_REFERENCE = 3 * (5 - math.sqrt(21)) / 8

params = st.builds(
    ClassParams,
    lam=st.floats(0.01, 1.0),
    alpha=st.floats(0.0, 0.99),
    n=st.integers(1, 5),
)


def _quadratic_formula_root(p: ClassParams) -> float:
    c0, c1, c2 = threshold_quadratic(p).coef
    q = -0.5 * (c1 + math.sqrt(c1 * c1 - 4 * c2 * c0))
    roots = [c0 / q] + ([q / c2] if c2 != 0 else [])
    return min(r for r in roots if r > 0)


# ── Thresholds ────────────────────────────────────────────────────────────────

class TestDelta:
    def test_reference_value(self):
        p = ClassParams(lam=0.25, alpha=0.5, n=1)
        assert delta_threshold(p) == pytest.approx(DELTA_REFERENCE, abs=1e-12)

    def test_reference_residual(self):
        p = ClassParams(lam=0.25, alpha=0.5, n=1)
        assert abs(threshold_quadratic(p)(delta_threshold(p))) < 1e-10

    @given(params)
    @settings(max_examples=100, deadline=None)
    def test_agrees_with_quadratic_formula(self, p):
        delta = delta_threshold(p)
        assert delta == pytest.approx(_quadratic_formula_root(p), rel=1e-10, abs=1e-12)

    @given(params)
    @settings(max_examples=100, deadline=None)
    def test_strict_upper_bound(self, p):
        assert delta_threshold(p) * (p.n + 1) < p.n * (p.n + 1 - p.alpha)

    def test_alpha_zero_is_accepted(self):
        assert delta_threshold(ClassParams(lam=0.5, alpha=0.0, n=1)) > 0

    def test_alpha_one_is_rejected(self):
        with pytest.raises(DomainError):
            delta_threshold(ClassParams(lam=0.5, alpha=1.0, n=1))

    def test_second_threshold_contracts_delta(self):
        p = ClassParams(lam=0.25, alpha=0.5, n=1)
        assert thm2_threshold(p) == pytest.approx(DELTA_REFERENCE * 2 / 3, abs=1e-12)

    def test_modulus_bounds(self):
        p = ClassParams(lam=0.25, alpha=0.5, n=1)
        low, high = modulus_bounds(p, 0.15)
        assert (low, high) == pytest.approx((0.9, 1.1))


# ── Construction ──────────────────────────────────────────────────────────────

class TestDoubleIntegral:
    @pytest.mark.parametrize("n, alpha", [(1, 0.5), (2, 0.3), (3, 0.9)])
    def test_constant_perturbation_thm1(self, n, alpha):
        # g ≡ c gives f = z + c·z^{n+1}/(n(n+1−α))
        c, z = 0.1, 0.5 + 0.2j
        p = ClassParams(lam=0.5, alpha=alpha, n=n)
        f = build_double_integral_fn(polynomial_map([c]), p, Variant.THM1)
        expected = z + c * z ** (n + 1) / (n * (n + 1 - alpha))
        assert complex(f.value(z)) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("n, alpha", [(1, 0.5), (2, 0.7)])
    def test_constant_perturbation_thm2(self, n, alpha):
        # g ≡ c gives f = z + c·z^{n+1}/((n+1)(n−α)); the weight r^{n−1−α} may be singular
        c, z = 0.1, -0.4 + 0.3j
        p = ClassParams(lam=0.5, alpha=alpha, n=n)
        f = build_double_integral_fn(polynomial_map([c]), p, Variant.THM2)
        expected = z + c * z ** (n + 1) / ((n + 1) * (n - alpha))
        assert complex(f.value(z)) == pytest.approx(expected, abs=1e-12)

    @pytest.mark.parametrize("variant", list(Variant))
    def test_condition_reproduces_perturbation(self, variant):
        g = polynomial_map([0.05, -0.02j, 0.01])
        p = ClassParams(lam=0.4, alpha=0.6, n=2)
        f = build_double_integral_fn(g, p, variant)
        z = 0.6 * np.exp(1j * np.linspace(0, 2 * np.pi, 7))
        assert np.allclose(condition_values(f, p, variant, z), np.abs(z**2 * g.value(z)), atol=1e-10)

    def test_derivatives_match_finite_differences(self):
        g = polynomial_map([0.05, 0.03, -0.01j])
        f = build_double_integral_fn(g, ClassParams(lam=0.4, alpha=0.25, n=1))
        z, h = 0.3 - 0.2j, 1e-6
        assert complex(f.d1(z)) == pytest.approx(
            complex((f.value(z + h) - f.value(z - h)) / (2 * h)), abs=1e-8
        )
        assert complex(f.d2(z)) == pytest.approx(
            complex((f.d1(z + h) - f.d1(z - h)) / (2 * h)), abs=1e-7
        )

    def test_member_is_normalized(self):
        f = build_double_integral_fn(polynomial_map([0.05]), ClassParams(lam=0.4, alpha=0.25, n=2))
        assert complex(f.value(0.0)) == 0
        assert complex(f.d1(0.0)) == pytest.approx(1.0)
        assert complex(f.d2(0.0)) == pytest.approx(0.0)

    def test_sup_of_condition_for_constant_g(self):
        c = 0.1
        p = ClassParams(lam=0.25, alpha=0.5, n=1)
        f = build_double_integral_fn(polynomial_map([c]), p)
        grid = DiskGrid(angular=128)
        report = check_sufficient_condition(f, p, Variant.THM1, grid)
        assert report.sup_value == pytest.approx(c * grid.guard, abs=1e-9)
        assert report.satisfied


# ── Suite ─────────────────────────────────────────────────────────────────────

class TestSufficiencySuite:
    def test_sampled_members_satisfy_condition(self):
        p = ClassParams(lam=0.3, alpha=0.6, n=1)
        grid = DiskGrid(angular=128)
        for f in sample_members(p, 3, seed=11):
            assert check_sufficient_condition(f, p, Variant.THM1, grid).satisfied

    def test_suite_passes(self):
        result = run_sufficiency_suite(seed=7)
        assert result.passed, result.details
        assert result.checks == 20 * 3 + 10 * 2
