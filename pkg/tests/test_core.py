"""
Unit tests for core: arithmetic functions, Pell solver, polynomials and the
slash cocycle.
"""

import pytest

from core.arithmetic import (
    as_discriminant,
    fundamental_factor,
    is_discriminant,
    kronecker,
    moebius,
    pell_fundamental,
    sigma,
)
from core.errors import DomainError
from core.modular import cocycle, slash
from core.polynomials import CPoly, poly_mod_reduce, poly_sum
from core.types import IDENTITY, Mat2, Point, S, T


class TestKronecker:
    """Test the Kronecker symbol."""

    @pytest.mark.unit
    @pytest.mark.arithmetic
    @pytest.mark.parametrize("delta,n,expected", [
        (5, 2, -1),
        (5, 3, -1),
        (5, 5, 0),
        (8, 3, -1),
        (8, 7, 1),
        (13, 3, 1),
        (5, 1, 1),
        (8, 2, 0),
        (1, 0, 1),
    ])
    def test_known_values(self, delta, n, expected):
        assert kronecker(delta, n) == expected

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_multiplicative_in_n(self):
        """(delta / mn) = (delta / m)(delta / n)."""
        for delta in (5, 8, 12, 13):
            for m in range(1, 15):
                for n in range(1, 15):
                    assert kronecker(delta, m * n) == kronecker(delta, m) * kronecker(delta, n)


class TestDivisorFunctions:
    """Test moebius and sigma."""

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_moebius(self):
        assert [moebius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_moebius_rejects_zero(self):
        with pytest.raises(DomainError):
            moebius(0)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_sigma_integer_and_real(self):
        assert sigma(1, 6) == 12
        assert sigma(0, 12) == 6
        assert isinstance(sigma(2, 4), int)
        assert sigma(-1, 2) == pytest.approx(1.5)


class TestDiscriminants:
    """Test D = delta f^2 splitting and validation."""

    @pytest.mark.unit
    @pytest.mark.arithmetic
    @pytest.mark.parametrize("D,delta,f", [
        (5, 5, 1),
        (8, 8, 1),
        (12, 12, 1),
        (20, 5, 2),
        (32, 8, 2),
        (45, 5, 3),
        (13, 13, 1),
    ])
    def test_fundamental_factor(self, D, delta, f):
        disc = fundamental_factor(D)
        assert (disc.D, disc.delta, disc.f) == (D, delta, f)
        assert disc.delta * disc.f ** 2 == D

    @pytest.mark.unit
    @pytest.mark.arithmetic
    @pytest.mark.parametrize("D", [7, 9, 0, -5, 4, 3])
    def test_rejects_invalid(self, D):
        assert not is_discriminant(D)
        with pytest.raises(DomainError):
            fundamental_factor(D)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_as_discriminant_passthrough(self, disc5):
        assert as_discriminant(disc5) is disc5
        with pytest.raises(DomainError):
            as_discriminant(5.0)


class TestPell:
    """Test the minimal solution of t^2 - D u^2 = 4."""

    @pytest.mark.unit
    @pytest.mark.arithmetic
    @pytest.mark.parametrize("D,t,u", [(5, 3, 1), (8, 6, 2), (13, 11, 3), (20, 18, 4), (12, 4, 1)])
    def test_known_solutions(self, D, t, u):
        sol = pell_fundamental(D)
        assert (sol.t, sol.u) == (t, u)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_solution_satisfies_equation(self):
        for D in (5, 8, 12, 13, 17, 21, 28, 61):
            sol = pell_fundamental(D)
            assert sol.t ** 2 - D * sol.u ** 2 == 4
            assert sol.u > 0


class TestPolynomials:
    """Test CPoly arithmetic and reduction modulo X^(2k-2) - 1."""

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_trailing_zeros_trimmed(self):
        assert CPoly((1, 2, 0, 0)).degree == 1
        assert CPoly.zero().degree == -1

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_integer_arithmetic_stays_exact(self):
        q = CPoly.from_quadratic(-1, 1, 1)
        cube = q ** 3
        assert cube.is_integral()
        assert cube == q * q * q
        assert cube(2.0) == pytest.approx(q(2.0) ** 3)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_poly_sum(self):
        total = poly_sum([CPoly((1,)), CPoly((0, 1)), CPoly((0, 0, 1))])
        assert total == CPoly((1, 1, 1))

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_mod_reduce_removes_multiple(self):
        """-4X^2 + 4 is -4 (X^2 - 1): remainder zero, constant -4."""
        reduced, c = poly_mod_reduce(CPoly((4, 0, -4)), 2)
        assert reduced == CPoly.zero()
        assert c == -4

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_mod_reduce_keeps_lower_terms(self):
        reduced, c = poly_mod_reduce(CPoly((1, 2, 3, 4, 5)), 3)
        assert c == 5
        assert reduced == CPoly((6, 2, 3, 4))

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_mod_reduce_degree_overflow(self):
        with pytest.raises(DomainError):
            poly_mod_reduce(CPoly((1, 0, 0, 1)), 2)


class TestModular:
    """Test Point, Mat2 and the weight-k cocycle."""

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_point_requires_upper_half_plane(self):
        with pytest.raises(DomainError):
            Point(0.0, 0.0)
        with pytest.raises(DomainError):
            Point(0.0, -1.0)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_generators(self):
        assert (S @ S) == Mat2(-1, 0, 0, -1)
        assert S.det == 1 and T.det == 1
        assert T.inverse() @ T == IDENTITY

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_cocycle_at_i(self):
        """S fixes i with j(S, i) = i."""
        image, factor = cocycle(S, Point(0.0, 1.0), 2)
        assert image.x == pytest.approx(0.0, abs=1e-15)
        assert image.y == pytest.approx(1.0)
        assert factor == pytest.approx(-1.0)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_cocycle_relation(self):
        """j(gh, tau) = j(g, h tau) j(h, tau)."""
        g, h = S @ T, T @ T @ S
        tau = Point(0.3, 0.7)
        h_tau, j_h = cocycle(h, tau, -1)
        _, j_g = cocycle(g, h_tau, -1)
        _, j_gh = cocycle(g @ h, tau, -1)
        assert j_gh == pytest.approx(j_g * j_h)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_cocycle_rejects_det(self):
        with pytest.raises(DomainError):
            cocycle(Mat2(2, 0, 0, 1), Point(0.0, 1.0), 2)

    @pytest.mark.unit
    @pytest.mark.arithmetic
    def test_slash_weight_minus_two(self):
        """(tau^-2) |_{-2} S = tau^2 (-1/tau)^-2 = tau^4."""
        slashed = slash(lambda tau: tau.tau ** -2, S, -2)
        tau = Point(0.4, 1.1)
        assert slashed(tau) == pytest.approx(tau.tau ** 4)
