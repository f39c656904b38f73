"""
Tests for the constant term, local polynomials, wall jumps and the I-integral.
"""

import math

import pytest

from core.errors import DomainError, WallCollisionError
from core.types import Point
from qforms.forms import QForm
from qforms.reduction import narrow_class_reps
from walls import (
    c_inf,
    c_inf_class_term,
    c_inf_classes,
    c_inf_term,
    ival_check,
    ival_closed_form,
    ival_quadrature,
    jump_poly,
    local_poly,
    local_poly_class,
    wall_jump,
    wall_report,
)

SQ5 = math.sqrt(5)
APEX = Point(-0.5, SQ5 / 2)


class TestConstantTerm:
    """Test c_inf and its class version."""

    @pytest.mark.unit
    @pytest.mark.walls
    def test_closed_form(self):
        assert c_inf(5, 2) == pytest.approx(-(5 ** -1.5), rel=1e-10)
        assert c_inf(20, 2) == pytest.approx(-1.375 * 5 ** -1.5, rel=1e-10)
        term = c_inf_term(5, 4)
        assert term.closed_form
        assert term.error == 0.0

    @pytest.mark.unit
    @pytest.mark.walls
    def test_odd_weight_is_numeric(self, quick_params):
        term = c_inf_term(12, 3, quick_params)
        assert not term.closed_form
        assert term.value == pytest.approx(0.0, abs=1e-15)

    @pytest.mark.unit
    @pytest.mark.walls
    def test_class_constants_sum_to_full_constant(self, default_params):
        classes = narrow_class_reps(12)
        total = sum(c_inf_classes(12, 2, default_params))
        error = sum(c_inf_class_term(A, 2, default_params).error for A in classes)
        assert total == pytest.approx(c_inf(12, 2), abs=error + 1e-14)


class TestLocalPolynomials:
    """Test P_C on components of the complement of the walls."""

    @pytest.mark.unit
    @pytest.mark.walls
    def test_cusp_component_is_constant(self, quick_params):
        poly = local_poly(2, 5, Point(0.0, 2.0), quick_params)
        assert poly.degree == 0
        assert poly.coeff(0) == pytest.approx(c_inf(5, 2))

    @pytest.mark.unit
    @pytest.mark.walls
    def test_crossing_one_wall(self, quick_params):
        """Below S_[1,1,-1] the form [-1,-1,1] adds -1/2 5^(-3/2) (X^2 + X - 1)."""
        inside = local_poly(2, 5, Point(-0.5, 1.0), quick_params)
        outside = local_poly(2, 5, Point(-0.5, 1.2), quick_params)
        for X in (0.0, 0.7, 0.3 + 0.2j):
            expected = -0.5 * 5 ** -1.5 * (X * X + X - 1)
            assert inside(X) - outside(X) == pytest.approx(expected, rel=1e-12, abs=1e-15)
            assert jump_poly(2, 5, QForm(1, 1, -1))(X) == pytest.approx(expected, rel=1e-12, abs=1e-15)

    @pytest.mark.unit
    @pytest.mark.walls
    def test_wall_report(self, quick_params):
        report = wall_report(2, 5, Point(-0.5, 1.0), quick_params)
        data = report.to_dict()
        assert data["signature"] == [[-1, -1, 1]]
        assert data["signature_hash"] == report.signature_hash
        assert report.value_at() == report.poly(complex(-0.5, 1.0))

    @pytest.mark.unit
    @pytest.mark.walls
    def test_on_wall_point_is_rejected(self, quick_params):
        with pytest.raises(WallCollisionError):
            local_poly(2, 5, APEX, quick_params)

    @pytest.mark.unit
    @pytest.mark.walls
    def test_class_polynomials_sum_to_full(self, default_params):
        tau = Point(0.1234, 0.4321)
        classes = narrow_class_reps(12)
        full = local_poly(2, 12, tau, default_params)
        parts = [local_poly_class(2, A, tau, default_params) for A in classes]
        error = sum(c_inf_class_term(A, 2, default_params).error for A in classes)
        for X in (0.0, 0.5, -1.25):
            assert sum(p(X) for p in parts) == pytest.approx(full(X), abs=error + 1e-12)


class TestWallJump:
    """Test the jump of F across a single wall."""

    @pytest.mark.unit
    @pytest.mark.walls
    def test_jump_at_apex(self, default_params):
        expected = 1.25 * 5 ** -1.5
        assert wall_jump(2, 5, QForm(1, 1, -1), APEX, default_params) == pytest.approx(expected)
        assert wall_jump(2, 5, QForm(-1, -1, 1), APEX, default_params) == pytest.approx(expected)

    @pytest.mark.unit
    @pytest.mark.walls
    def test_odd_weight_has_no_jump(self, default_params):
        assert wall_jump(3, 5, QForm(1, 1, -1), APEX, default_params) == 0

    @pytest.mark.unit
    @pytest.mark.walls
    def test_point_off_the_wall(self, default_params):
        with pytest.raises(DomainError):
            wall_jump(2, 5, QForm(1, 1, -1), Point(-0.5, 1.0), default_params)

    @pytest.mark.unit
    @pytest.mark.walls
    def test_wrong_discriminant(self):
        with pytest.raises(DomainError):
            jump_poly(2, 8, QForm(1, 1, -1))


class TestIIntegral:
    """Test the horizontal-line integral of one pair's summand."""

    @pytest.mark.unit
    @pytest.mark.walls
    def test_closed_form(self):
        assert ival_closed_form(1, 5, 2) == pytest.approx(-(5 ** 1.5) * math.pi / 12)
        assert ival_closed_form(3, 5, 2) == pytest.approx(ival_closed_form(1, 5, 2) / 9)

    @pytest.mark.unit
    @pytest.mark.walls
    @pytest.mark.parametrize("k", [2, 3])
    def test_quadrature_is_independent_of_height(self, k):
        for y in (1.5, 2.0, 3.0):
            quad, closed = ival_check(1, 5, k, y)
            assert quad == pytest.approx(closed, rel=1e-6)

    @pytest.mark.unit
    @pytest.mark.walls
    def test_line_below_the_circle(self):
        with pytest.raises(DomainError):
            ival_quadrature(1, 5, 2, 1.0)
        with pytest.raises(DomainError):
            ival_closed_form(0, 5, 2)

    @pytest.mark.unit
    @pytest.mark.walls
    def test_error_estimate_is_small(self):
        value, error = ival_quadrature(2, 5, 2, 1.0)
        assert error < 1e-7 * abs(value)
