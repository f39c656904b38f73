"""
Tests for period integrals and the rationality of even periods.
"""

import math

import pytest

from core.errors import DomainError
from core.polynomials import CPoly, poly_mod_reduce
from modeval.fourier import CoeffSeries
from periods import (
    PeriodSet,
    check_rationality_detailed,
    even_period_error,
    even_period_poly,
    periods_from_series,
    rational_rhs,
    rationality_residual,
)
from verify import check_rationality

DELTA_COEFFS = (1.0, -24.0, 252.0, -1472.0, 4830.0, -6048.0, -16744.0, 84480.0)


@pytest.fixture
def delta_series():
    return CoeffSeries(6, tuple(complex(c) for c in DELTA_COEFFS))


class TestRationalSide:
    """Test the exact integer side of the congruence."""

    @pytest.mark.unit
    @pytest.mark.periods
    def test_rational_rhs_weight_four(self):
        rhs = rational_rhs(2, 5)
        assert rhs == CPoly((4, 0, -4))
        assert rhs.is_integral()
        reduced, constant = poly_mod_reduce(rhs, 2)
        assert reduced == CPoly((0,))
        assert constant == -4

    @pytest.mark.unit
    @pytest.mark.periods
    def test_rational_rhs_is_even_and_integral(self):
        for D in (5, 8, 13):
            rhs = rational_rhs(6, D)
            assert rhs.is_integral()
            assert rhs.degree <= 10

    @pytest.mark.unit
    @pytest.mark.periods
    def test_odd_k_is_rejected(self):
        with pytest.raises(DomainError):
            rational_rhs(3, 5)


class TestPeriodIntegrals:
    """Test r_n on a known coefficient series."""

    @pytest.mark.unit
    @pytest.mark.periods
    def test_methods_agree(self, delta_series, quick_params):
        by_quadrature = periods_from_series(delta_series, quick_params, method="quadrature")
        by_gamma = periods_from_series(delta_series, quick_params, method="gamma")
        for q, g in zip(by_quadrature.r, by_gamma.r):
            assert q == pytest.approx(g, rel=1e-9, abs=1e-15)

    @pytest.mark.unit
    @pytest.mark.periods
    def test_folding_symmetry(self, delta_series, quick_params):
        """r_n = (-1)^k r_{2k-2-n}."""
        result = periods_from_series(delta_series, quick_params, method="gamma")
        for n in range(11):
            assert result.r[n] == pytest.approx(result.r[10 - n], rel=1e-12)
        assert all(abs(v) < 1e-15 for v in result.imag)

    @pytest.mark.unit
    @pytest.mark.periods
    def test_unknown_method(self, delta_series, quick_params):
        with pytest.raises(DomainError):
            periods_from_series(delta_series, quick_params, method="simpson")

    @pytest.mark.unit
    @pytest.mark.periods
    def test_period_set_shape(self):
        with pytest.raises(DomainError):
            PeriodSet(2, (1.0, 2.0))
        assert PeriodSet.zero(3).r == (0.0,) * 5


class TestEvenPeriodPolynomial:
    """Test r+ and the residual of the congruence."""

    @pytest.mark.unit
    @pytest.mark.periods
    def test_even_period_poly(self):
        p = PeriodSet(2, (3.0, 7.0, 5.0), errors=(0.1, 0.2, 0.3))
        assert even_period_poly(p) == CPoly((-5.0, 0.0, 3.0))
        assert even_period_error(p) == pytest.approx(0.3)

    @pytest.mark.unit
    @pytest.mark.periods
    def test_zero_periods_leave_the_rational_side(self):
        """Weight four has no cusp forms, and -4X^2 + 4 is a multiple of X^2 - 1."""
        result = rationality_residual(2, 5, PeriodSet.zero(2))
        assert result.residual == 0.0
        assert result.fitted_constant == pytest.approx(-4.0)
        assert result.to_dict()["rational_rhs"] == [4, 0, -4]

    @pytest.mark.unit
    @pytest.mark.periods
    def test_periods_meeting_minus_the_rational_side(self):
        """r+ = -rational_rhs exactly leaves nothing after reduction."""
        k, top = 6, 10
        target = rational_rhs(k, 5).scale(-1)
        r = [0.0] * (top + 1)
        for n in range(0, top + 1, 2):
            r[n] = float(target.coeff(top - n)) / ((-1) ** (n // 2) * math.comb(top, n))
        result = rationality_residual(k, 5, PeriodSet(k, tuple(r), errors=(0.0,) * (top + 1)))
        assert result.residual == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.unit
    @pytest.mark.periods
    def test_positive_orientation_is_not_accepted(self):
        k, top = 6, 10
        rhs = rational_rhs(k, 5)
        r = [0.0] * (top + 1)
        for n in range(0, top + 1, 2):
            r[n] = float(rhs.coeff(top - n)) / ((-1) ** (n // 2) * math.comb(top, n))
        result = rationality_residual(k, 5, PeriodSet(k, tuple(r), errors=(0.0,) * (top + 1)))
        assert result.residual > 1.0

    @pytest.mark.integration
    @pytest.mark.periods
    @pytest.mark.slow
    @pytest.mark.parametrize("D", [5, 8])
    def test_weight_twelve_congruence(self, D, default_params):
        result = check_rationality_detailed(6, D, default_params)
        assert result.residual <= max(result.budget, 1e-3)


class TestRationalityCheck:
    """Test the congruence check over weights and discriminants."""

    @pytest.mark.integration
    @pytest.mark.periods
    @pytest.mark.parametrize("D", [5, 8, 12, 13])
    @pytest.mark.parametrize("k", [2, 4])
    def test_weights_without_cusp_forms(self, k, D, quick_params):
        record = check_rationality(k, D, quick_params)
        assert record.passed
        assert record.details["exact"] is True
        assert record.residual == 0.0

    @pytest.mark.integration
    @pytest.mark.periods
    @pytest.mark.slow
    @pytest.mark.parametrize("D", [5, 8, 12, 13])
    def test_weight_twelve(self, D, default_params):
        record = check_rationality(6, D, default_params, abs_tol=1e-3)
        assert record.passed, f"residual {record.residual:.3g} budget {record.budget:.3g}"
        assert record.details["exact"] is False
