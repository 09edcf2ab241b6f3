"""Quadrature closed forms, limit representations, and functional equations."""

from __future__ import annotations

import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baselkit.quadrature import (
    AccuracyError,
    IntegralKind,
    ProductKind,
    functional_eq_dilog,
    functional_eq_inverse,
    integrate,
    product_form,
    riemann_sum,
    sample_monotonicity,
    scaled_dilog,
    scaled_dilog_derivative,
    scaled_dilog_ode_residual,
    series_integral_pair,
    two_integral_residual,
)

PI2_6 = math.pi**2 / 6
PI2_12 = math.pi**2 / 12


class TestIntegrate:
    @pytest.mark.parametrize(
        "kind,target",
        [
            (IntegralKind.LOG_OVER_1MT, -PI2_6),
            (IntegralKind.LOG_OVER_1PT, -PI2_12),
            (IntegralKind.LOG1P_OVER_T, PI2_12),
            (IntegralKind.LOG1M_OVER_T, -PI2_6),
        ],
    )
    def test_closed_forms(self, kind, target):
        result = integrate(kind, 1e-12)
        assert kind.closed_form == target
        assert abs(result.value - target) < 1e-10
        assert abs(result.value - target) <= max(1e-12, 10 * result.err_estimate)
        assert result.err_estimate > 0
        assert result.evaluations > 0

    def test_independent_oracle(self):
        # QUADPACK with explicit singular endpoints as a second route
        from scipy.integrate import quad

        oracle, _ = quad(lambda t: math.log(t) / (1 + t), 0, 1, points=[0])
        ours = integrate(IntegralKind.LOG_OVER_1PT, 1e-12).value
        assert abs(ours - oracle) < 1e-9

    def test_tol_validated(self):
        with pytest.raises(ValueError):
            integrate(IntegralKind.LOG_OVER_1MT, 1e-16)
        with pytest.raises(ValueError):
            integrate(IntegralKind.LOG_OVER_1MT, 1e-2)

    def test_parts_identity(self):
        # integration by parts swaps the two pi^2/12 integrands up to sign
        a = integrate(IntegralKind.LOG1P_OVER_T, 1e-12).value
        b = integrate(IntegralKind.LOG_OVER_1PT, 1e-12).value
        assert abs(a + b) < 1e-10

    def test_json_shape(self):
        blob = integrate(IntegralKind.LOG_OVER_1MT, 1e-10).to_json()
        assert set(blob) == {"value", "err_estimate", "evaluations"}


class TestTwoIntegralIdentity:
    def test_tight(self):
        assert two_integral_residual(1e-12) < 1e-11

    def test_loose(self):
        assert two_integral_residual(1e-6) < 1e-5

    def test_cross_value(self):
        lhs = integrate(IntegralKind.LOG_OVER_1MT, 1e-12).value
        assert abs(lhs - 2 * -0.8224670334241132) < 1e-10


class TestRiemannSum:
    def test_single_term(self):
        assert riemann_sum(IntegralKind.LOG_OVER_1MT, 2) == pytest.approx(
            math.log(0.5), abs=1e-15
        )

    def test_converges(self):
        assert abs(riemann_sum(IntegralKind.LOG_OVER_1MT, 100000) + PI2_6) < 1e-2

    def test_refinement_shrinks_error(self):
        for kind in (IntegralKind.LOG_OVER_1MT, IntegralKind.LOG1M_OVER_T,
                     IntegralKind.LOG_OVER_1PT):
            errs = [abs(riemann_sum(kind, n) - kind.closed_form) for n in (500, 8000)]
            assert errs[1] < errs[0]

    def test_coarse_refinement_trend(self):
        for kind in (IntegralKind.LOG_OVER_1MT, IntegralKind.LOG1M_OVER_T,
                     IntegralKind.LOG_OVER_1PT):
            errs = [abs(riemann_sum(kind, n) - kind.closed_form) for n in (2, 4, 8)]
            assert all(b <= a for a, b in zip(errs, errs[1:])), kind

    def test_rejected_kind(self):
        with pytest.raises(ValueError):
            riemann_sum(IntegralKind.LOG1P_OVER_T, 10)

    def test_monotone_samples(self):
        assert sample_monotonicity(IntegralKind.LOG_OVER_1MT, 10000) == 1
        assert sample_monotonicity(IntegralKind.LOG1M_OVER_T, 10000) == -1


class TestProductForm:
    def test_single_factor(self):
        assert product_form(ProductKind.MINUS, 2) == pytest.approx(math.log(0.5), abs=1e-15)

    def test_limits(self):
        assert abs(product_form(ProductKind.MINUS, 100000) + PI2_6) < 1e-2
        assert abs(product_form(ProductKind.PLUS, 100000) - PI2_12) < 1e-2

    def test_refinement_shrinks_error(self):
        for kind in ProductKind:
            errs = [abs(product_form(kind, n) - kind.closed_form) for n in (500, 8000)]
            assert errs[1] < errs[0]


class TestScaledDilog:
    def test_endpoints(self):
        assert scaled_dilog(0.0) == 0.0
        assert abs(scaled_dilog(0.5, "series") - PI2_6) < 1e-11
        assert abs(scaled_dilog(0.5, "integral") - PI2_6) < 1e-11
        assert abs(scaled_dilog(-0.5, "series") + PI2_12) < 1e-11
        assert abs(scaled_dilog(-0.5, "integral") + PI2_12) < 1e-11

    def test_modes_agree_on_grid(self):
        xs = [-0.5 + 0.05 * i for i in range(21)]
        for x in xs:
            s = scaled_dilog(x, "series", 1e-10)
            q = scaled_dilog(x, "integral", 1e-10)
            assert abs(s - q) < 1e-9, f"x={x}"

    def test_against_polylog_oracle(self):
        mpmath.mp.dps = 30
        for x in (-0.5, -0.31, -0.1, 0.2, 0.37, 0.5):
            ref = float(mpmath.polylog(2, 2 * x))
            assert abs(scaled_dilog(x, "series") - ref) < 1e-11
            assert abs(scaled_dilog(x, "integral") - ref) < 1e-11

    def test_domain(self):
        with pytest.raises(ValueError):
            scaled_dilog(0.51)
        with pytest.raises(ValueError):
            scaled_dilog(0.4, "nonsense")

    def test_derivative(self):
        assert scaled_dilog_derivative(0.0) == 2.0
        assert scaled_dilog_derivative(0.25) == pytest.approx(-math.log(0.5) / 0.25, abs=1e-14)
        with pytest.raises(ValueError):
            scaled_dilog_derivative(0.5)

    def test_derivative_matches_series_slope(self):
        # centered finite difference of the series evaluation
        h = 1e-6
        for x in (-0.3, -0.05, 0.1, 0.3):
            slope = (scaled_dilog(x + h, "series") - scaled_dilog(x - h, "series")) / (2 * h)
            assert abs(slope - scaled_dilog_derivative(x)) < 1e-7

    def test_ode_residual(self):
        assert scaled_dilog_ode_residual(0.25, 60) < 1e-12
        assert scaled_dilog_ode_residual(0.0, 10) < 1e-15
        # truncation bound is geometric in (2|x|)^n_terms
        assert scaled_dilog_ode_residual(0.4, 20) < 10 * 0.8**19
        with pytest.raises(ValueError):
            scaled_dilog_ode_residual(0.5, 30)


class TestFunctionalEquations:
    def test_dilog_identity_trivial(self):
        assert functional_eq_dilog(0.0) == 0.0

    def test_dilog_identity_endpoint(self):
        assert functional_eq_dilog(1.0) < 1e-9

    def test_dilog_identity_grid(self):
        for i in range(1, 10):
            assert functional_eq_dilog(i / 10) < 1e-9

    @given(x=st.floats(min_value=-1.0, max_value=1.0, allow_nan=False))
    @settings(max_examples=25, deadline=None)
    def test_dilog_identity_property(self, x):
        assert functional_eq_dilog(x) < 1e-9

    def test_inverse_identity(self):
        assert functional_eq_inverse(1.0) == 0.0
        assert functional_eq_inverse(math.e) < 1e-9
        for x in (0.1, 0.5, 2.0, 10.0):
            assert functional_eq_inverse(x) < 1e-9

    def test_inverse_symmetry_is_exact(self):
        assert functional_eq_inverse(0.1) == functional_eq_inverse(10.0)

    def test_inverse_domain(self):
        with pytest.raises(ValueError):
            functional_eq_inverse(0.0)


class TestSeriesIntegralPair:
    def test_log_two(self):
        s, i = series_integral_pair(0.5, 1.0, 0.0)
        assert abs(s - math.log(2)) < 1e-11
        assert abs(i - math.log(2)) < 1e-11

    def test_alternating_endpoint(self):
        s, i = series_integral_pair(-1.0, 1.0, 0.0, 1e-8)
        assert abs(s + math.log(2)) < 1e-7
        assert abs(i + math.log(2)) < 1e-10
        assert abs(s - i) < 1e-7

    def test_generic_parameters(self):
        s, i = series_integral_pair(0.9, 2.0, 3.0, 1e-10)
        assert abs(s - i) < 1e-8

    def test_agreement_contract(self):
        for r, a, b in [(0.5, 1.0, 0.0), (-0.9, 1.0, 0.0), (0.9, 2.0, 3.0)]:
            s, i = series_integral_pair(r, a, b, 1e-10)
            assert abs(s - i) < 1e-9

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            series_integral_pair(1.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            series_integral_pair(0.5, 0.0, 0.0)
        with pytest.raises(ValueError):
            series_integral_pair(0.5, 1.0, -1.0)

    @given(
        r=st.floats(min_value=-0.95, max_value=0.95, allow_nan=False),
        a=st.floats(min_value=0.25, max_value=4.0, allow_nan=False),
        b=st.floats(min_value=0.0, max_value=5.0, allow_nan=False),
    )
    @settings(max_examples=25, deadline=None)
    def test_pair_property(self, r, a, b):
        s, i = series_integral_pair(r, a, b, 1e-10)
        assert abs(s - i) < 1e-8


def test_err_estimate_never_zero():
    for kind in IntegralKind:
        assert integrate(kind, 1e-8).err_estimate > 0.0


def test_level_cap_raises_with_best_result(monkeypatch):
    import baselkit.quadrature as quad

    monkeypatch.setattr(quad, "_MAX_LEVEL", 1)
    with pytest.raises(AccuracyError) as exc:
        integrate(IntegralKind.LOG_OVER_1MT, 1e-12)
    best = exc.value.best
    assert math.isfinite(best.value)
    assert best.err_estimate > 0
    # the carried best value is still a usable coarse approximation
    assert abs(best.value + PI2_6) < 0.1
