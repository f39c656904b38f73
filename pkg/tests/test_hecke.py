"""
Tests for Hecke operators and the Hecke relations.
"""

import pytest

from core.errors import DomainError
from core.types import Point
from hecke import (
    Evaluator,
    check_prime,
    hecke_points,
    hecke_Tp,
    screened_point,
    verify_hecke,
    verify_hecke_primitive,
)
from modeval.evaluators import eval_fkD
from qforms.geometry import walls_through
from walls.constants import c_inf


class TestOperators:
    """Test T_p on simple evaluators."""

    @pytest.mark.unit
    @pytest.mark.hecke
    def test_check_prime(self):
        check_prime(2)
        check_prime(13)
        for bad in (1, 4, 9, True, 2.0):
            with pytest.raises(DomainError):
                check_prime(bad)

    @pytest.mark.unit
    @pytest.mark.hecke
    def test_hecke_points(self):
        pts = hecke_points(2, Point(0.1, 1.0))
        assert [(p.x, p.y) for p in pts] == [
            (pytest.approx(0.2), pytest.approx(2.0)),
            (pytest.approx(0.05), pytest.approx(0.5)),
            (pytest.approx(0.55), pytest.approx(0.5)),
        ]

    @pytest.mark.unit
    @pytest.mark.hecke
    @pytest.mark.parametrize("p,weight", [(2, -2), (3, -6), (5, 12)])
    def test_constant_evaluator(self, p, weight, quick_params):
        """T_p multiplies a constant by p^(weight-1) + 1."""
        e = Evaluator.constant(2.5, weight)
        result = hecke_Tp(e, p, Point(0.3, 1.1), quick_params)
        assert result.value == pytest.approx(2.5 * (float(p) ** (weight - 1) + 1))

    @pytest.mark.unit
    @pytest.mark.hecke
    def test_evaluator_arithmetic(self, quick_params):
        e = Evaluator.constant(1.0, 0) + Evaluator.constant(2.0, 0).scaled(3.0)
        assert e(Point(0.0, 1.0), quick_params).value == pytest.approx(7.0)
        with pytest.raises(DomainError):
            Evaluator.constant(1.0, 0) + Evaluator.constant(1.0, 2)

    @pytest.mark.integration
    @pytest.mark.hecke
    def test_weight_twelve_eigenvalue(self, default_params):
        """f_{6,5} is a multiple of the discriminant function, whose T_2 eigenvalue is -24."""
        e = Evaluator(lambda tau, params: eval_fkD(6, 5, tau, params), 12, "f_5")
        tau = Point(0.1, 1.0)
        image = hecke_Tp(e, 2, tau, default_params)
        assert image.value == pytest.approx(-24 * e(tau, default_params).value, rel=1e-6)


class TestRelations:
    """Test the Hecke relations of F."""

    @pytest.mark.unit
    @pytest.mark.hecke
    @pytest.mark.parametrize("D,p", [(5, 2), (5, 3), (8, 3), (20, 2)])
    @pytest.mark.parametrize("k", [2, 4])
    def test_relation_holds_for_constant_terms(self, D, p, k):
        """Far above all walls every F is its constant, so the relation reduces to one among c_inf."""
        lhs = (float(p) ** (1 - 2 * k) + 1) * c_inf(D, k)
        kron = {(5, 2): -1, (5, 3): -1, (8, 3): -1, (20, 2): 0}[(D, p)]
        rhs = c_inf(D * p * p, k) + float(p) ** -k * kron * c_inf(D, k)
        if D == 20:
            rhs += float(p) ** (1 - 2 * k) * c_inf(5, k)
        assert lhs == pytest.approx(rhs, rel=1e-9)

    @pytest.mark.unit
    @pytest.mark.hecke
    def test_screened_point_keeps_a_clear_point(self, quick_params):
        tau, nudges = screened_point(5, 2, Point(0.3, 4.0), quick_params)
        assert nudges == 0
        assert tau == Point(0.3, 4.0)

    @pytest.mark.unit
    @pytest.mark.hecke
    def test_screened_point_moves_off_a_wall(self, quick_params):
        """2i lies on the wall of [1,-2,-4], which has discriminant 20."""
        tau, nudges = screened_point(5, 2, Point(0.0, 4.0), quick_params)
        assert nudges >= 1
        for pt in [tau] + hecke_points(2, tau):
            assert walls_through(20, pt, quick_params.wall_margin) == ()

    @pytest.mark.integration
    @pytest.mark.hecke
    @pytest.mark.slow
    def test_verify_hecke_weight_minus_two(self, default_params):
        result = verify_hecke(2, 5, 2, Point(0.0, 4.0), default_params)
        assert result.terms == ("F_20", "F_5")
        assert result.residual <= max(result.budget, 1e-6)

    @pytest.mark.integration
    @pytest.mark.hecke
    @pytest.mark.slow
    def test_verify_hecke_primitive(self, default_params):
        result = verify_hecke_primitive(2, 20, 2, Point(0.0, 4.0), default_params)
        assert result.terms == ("F'_80", "F'_5")
        assert result.residual <= max(result.budget, 1e-6)
