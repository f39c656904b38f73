"""
Tests for the truncated evaluators, Fourier coefficients and Eichler integrals.
"""

import math

import numpy as np
import pytest

from config.models import EvalParams
from core.errors import BudgetInfeasibleError, DomainError
from core.modular import cocycle
from core.types import Point, S
from modeval import (
    CoeffSeries,
    cusp_value,
    eichler_holo,
    eichler_nonholo,
    eval_F,
    eval_F_primitive,
    eval_FA,
    eval_fkD,
    fourier_coeffs,
    full_table,
)
from qforms.reduction import narrow_class_reps
from walls.constants import c_inf

# Fourier coefficients of the discriminant function
DELTA_COEFFS = (1.0, -24.0, 252.0, -1472.0, 4830.0)


class TestEvaluation:
    """Test basic evaluator behaviour."""

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_weight_must_be_at_least_two(self, quick_params):
        with pytest.raises(DomainError):
            eval_F(1, 5, 1j, quick_params)
        with pytest.raises(DomainError):
            eval_fkD(True, 5, 1j, quick_params)

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_odd_weight_full_sum_vanishes(self, quick_params):
        assert full_table(5, 50, 3).size == 0
        ev = eval_F(3, 5, Point(0.1, 0.9), quick_params)
        assert ev.value == 0
        assert ev.tail == 0.0
        assert c_inf(5, 3) == 0.0

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_scaled_and_to_dict(self, quick_params):
        ev = eval_F(2, 5, Point(0.0, 2.0), quick_params)
        doubled = ev.scaled(-2.0)
        assert doubled.value == pytest.approx(-2 * ev.value)
        assert doubled.tail == pytest.approx(2 * ev.tail)
        assert set(ev.to_dict()) == {"value_re", "value_im", "tail_estimate"}


class TestCuspForms:
    """Test f_{k,D}."""

    @pytest.mark.unit
    @pytest.mark.evaluators
    @pytest.mark.parametrize("k", [2, 3, 4, 5])
    def test_vanishes_without_cusp_forms(self, k, quick_params):
        """Weights 4, 6, 8 and 10 carry no cusp forms."""
        ev = eval_fkD(k, 5, Point(0.0, 1.0), quick_params)
        assert abs(ev.value) <= ev.tail

    @pytest.mark.integration
    @pytest.mark.evaluators
    def test_weight_twelve_is_proportional_to_delta(self, default_params):
        series = fourier_coeffs(6, 5, m_max=4, params=default_params)
        a1 = series.coeffs[0]
        assert abs(a1) > 1e-3
        assert (series.coeffs[1] / a1).real == pytest.approx(-24.0, rel=1e-6)
        assert (series.coeffs[2] / a1).real == pytest.approx(252.0, rel=1e-5)
        assert abs((series.coeffs[1] / a1).imag) < 1e-5

    @pytest.mark.integration
    @pytest.mark.evaluators
    def test_q_expansion_reproduces_lattice_sum(self, default_params):
        series = fourier_coeffs(6, 5, m_max=4, params=default_params)
        tau = Point(0.3, 1.5)
        direct = eval_fkD(6, 5, tau, default_params)
        expanded = cusp_value(series, tau)
        assert expanded.value == pytest.approx(direct.value, rel=1e-6)

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_fourier_needs_enough_samples(self):
        params = EvalParams(a_max=50, quad_points=8)
        with pytest.raises(BudgetInfeasibleError):
            fourier_coeffs(6, 5, m_max=4, params=params)


class TestHarmonicForms:
    """Test F_{1-k,D} and its class and primitive versions."""

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_constant_above_walls(self, default_params):
        ev = eval_F(2, 5, Point(0.0, 2.0), default_params)
        assert ev.value.real == pytest.approx(-(5 ** -1.5), abs=max(ev.tail, 1e-5))
        assert abs(ev.value.imag) <= max(ev.tail, 1e-5)

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_class_sum_recovers_uncompleted_sum(self, quick_params):
        """D = 12 has two narrow classes."""
        tau = Point(0.13, 0.71)
        classes = narrow_class_reps(12)
        assert len(classes) == 2
        for k in (2, 3):
            total = sum((-1) ** k * eval_FA(k, A, tau, quick_params).value for A in classes)
            full = eval_F(k, 12, tau, quick_params, complete=False).value
            assert total == pytest.approx(full, rel=1e-9, abs=1e-14)

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_primitive_sum_for_fundamental_discriminant(self, quick_params):
        """Every form of a fundamental discriminant is primitive, so F' = D^(k/2) F."""
        tau = Point(0.21, 0.83)
        full = eval_F(2, 5, tau, quick_params, complete=False).value
        prim = eval_F_primitive(2, 5, tau, quick_params, complete=False).value
        assert prim == pytest.approx(5.0 * full, rel=1e-12)

    @pytest.mark.integration
    @pytest.mark.evaluators
    def test_modularity_under_S(self, default_params):
        k = 2
        tau = Point(0.23, 0.91)
        image, factor = cocycle(S, tau, 2 - 2 * k)
        at_image = eval_F(k, 5, image, default_params)
        at_tau = eval_F(k, 5, tau, default_params)
        residual = abs(factor * at_image.value - at_tau.value)
        assert residual <= abs(factor) * at_image.tail + at_tau.tail + 1e-12

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_anchor_does_not_change_value(self, quick_params):
        tau = Point(0.37, 0.8)
        plain = eval_F(2, 5, tau, quick_params).value
        anchored = eval_F(2, 5, tau, quick_params, anchor=0.3).value
        assert anchored == pytest.approx(plain, abs=1e-6)


class TestEichlerIntegrals:
    """Test the q-series and the two Eichler integrals on a known series."""

    @pytest.fixture
    def delta_series(self):
        return CoeffSeries(6, tuple(complex(c) for c in DELTA_COEFFS))

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_cusp_value(self, delta_series):
        tau = Point(0.1, 1.3)
        q = np.exp(2j * math.pi * tau.tau)
        expected = sum(c * q ** (n + 1) for n, c in enumerate(DELTA_COEFFS))
        assert cusp_value(delta_series, tau).value == pytest.approx(expected, rel=1e-14)

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_holomorphic_eichler_integral(self, delta_series):
        tau = Point(-0.2, 0.9)
        q = np.exp(2j * math.pi * tau.tau)
        expected = sum(c * (n + 1) ** -11 * q ** (n + 1) for n, c in enumerate(DELTA_COEFFS))
        assert eichler_holo(delta_series, tau).value == pytest.approx(expected, rel=1e-14)

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_nonholomorphic_methods_agree(self, delta_series, quick_params):
        tau = Point(0.3, 0.8)
        params = quick_params.with_overrides(quad_points=200, tol=1e-12)
        by_series = eichler_nonholo(delta_series, tau, params, method="series")
        by_quadrature = eichler_nonholo(delta_series, tau, params, method="quadrature")
        assert by_quadrature.value == pytest.approx(by_series.value, rel=1e-8)

    @pytest.mark.unit
    @pytest.mark.evaluators
    def test_unknown_method(self, delta_series, quick_params):
        with pytest.raises(DomainError):
            eichler_nonholo(delta_series, Point(0.0, 1.0), quick_params, method="euler")

    @pytest.mark.unit
    @pytest.mark.evaluators
    @pytest.mark.parametrize("x,y", [(0.1, 1.2), (-0.3, 0.9)])
    def test_xi_of_nonholomorphic_integral_is_the_form(self, delta_series, quick_params, x, y):
        """2i y^(2-2k) conj(d f*/d tau-bar) = f, with no sign flip."""
        h = 1e-5
        k = delta_series.k
        value = lambda px, py: eichler_nonholo(delta_series, Point(px, py), quick_params, method="series").value
        fx = (value(x + h, y) - value(x - h, y)) / (2 * h)
        fy = (value(x, y + h) - value(x, y - h)) / (2 * h)
        dbar = 0.5 * (fx + 1j * fy)
        xi = 2j * y ** (2 - 2 * k) * dbar.conjugate()
        assert xi == pytest.approx(cusp_value(delta_series, Point(x, y)).value, rel=1e-5)
