"""
Unit tests for the special functions and Dirichlet series, checked against
scipy and mpmath oracles.
"""

import math

import mpmath
import numpy as np
import pytest
from scipy import integrate
from scipy import special as sp

from core.arithmetic import fundamental_factor
from core.errors import DomainError
from special import (
    PSI_SERIES_CUTOFF,
    LSeriesSpec,
    beta_complete,
    conductor_factor,
    dirichlet_L,
    phi,
    primitive_zagier_zeta,
    psi,
    upper_incomplete_gamma,
    zagier_tail,
    zagier_zeta,
    zagier_zeta_check,
    zeta,
)


class TestHyperbolicFunctions:
    """Test phi, psi and the complete beta value."""

    @pytest.mark.unit
    @pytest.mark.special
    @pytest.mark.parametrize("k", [2, 3, 4, 6])
    def test_phi_matches_quadrature(self, k):
        for v in (0.1, 0.7, 1.3, math.pi / 2):
            expected, _ = integrate.quad(lambda u: math.sin(u) ** (2 * k - 2), 0.0, v)
            assert phi(v, k) == pytest.approx(expected, rel=1e-12, abs=1e-15)

    @pytest.mark.unit
    @pytest.mark.special
    @pytest.mark.parametrize("k", [2, 3, 5, 8])
    def test_psi_matches_incomplete_beta(self, k):
        t = np.array([1e-6, 0.01, 0.3, PSI_SERIES_CUTOFF, 0.51, 0.9, 1.0])
        expected = 0.5 * sp.betainc(k - 0.5, 0.5, t) * sp.beta(k - 0.5, 0.5)
        np.testing.assert_allclose(psi(t, k), expected, rtol=1e-11)

    @pytest.mark.unit
    @pytest.mark.special
    def test_psi_scalar_and_endpoint(self):
        assert isinstance(psi(0.25, 2), float)
        assert psi(1.0, 2) == pytest.approx(math.pi / 4)
        for k in (2, 3, 7):
            assert psi(1.0, k) == pytest.approx(beta_complete(k) / 2, rel=1e-13)
            assert phi(math.pi / 2, k) == pytest.approx(beta_complete(k) / 2, rel=1e-13)

    @pytest.mark.unit
    @pytest.mark.special
    def test_beta_complete_matches_mpmath(self):
        for k in (2, 3, 4, 10):
            assert beta_complete(k) == pytest.approx(float(mpmath.beta(k - 0.5, 0.5)), rel=1e-14)

    @pytest.mark.unit
    @pytest.mark.special
    def test_domain_errors(self):
        with pytest.raises(DomainError):
            phi(2.0, 2)
        with pytest.raises(DomainError):
            psi(-0.1, 2)
        with pytest.raises(DomainError):
            psi(0.5, 1)

    @pytest.mark.unit
    @pytest.mark.special
    def test_upper_incomplete_gamma(self):
        x = np.array([0.0, 0.5, 3.0, 20.0])
        for s in (1, 2, 5):
            expected = sp.gammaincc(s, x) * sp.gamma(s)
            np.testing.assert_allclose(upper_incomplete_gamma(s, x), expected, rtol=1e-12)
        with pytest.raises(DomainError):
            upper_incomplete_gamma(0, 1.0)


class TestDirichletSeries:
    """Test zeta, quadratic L-values and the form zeta function."""

    @pytest.mark.unit
    @pytest.mark.special
    def test_zeta(self):
        assert zeta(2.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-13)
        assert zeta(3.0) == pytest.approx(float(mpmath.zeta(3)), rel=1e-13)
        with pytest.raises(DomainError):
            zeta(1.0)

    @pytest.mark.unit
    @pytest.mark.special
    def test_dirichlet_L_chi5(self):
        expected = 4 * math.pi ** 2 / (25 * math.sqrt(5))
        assert dirichlet_L(LSeriesSpec(5, 2.0)) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.unit
    @pytest.mark.special
    def test_lseries_spec_rejects_small_s(self):
        with pytest.raises(DomainError):
            LSeriesSpec(5, 1.0)

    @pytest.mark.unit
    @pytest.mark.special
    def test_conductor_factor(self):
        assert conductor_factor(fundamental_factor(5), 2.0) == pytest.approx(1.0)
        assert conductor_factor(fundamental_factor(20), 2.0) == pytest.approx(1.375)

    @pytest.mark.unit
    @pytest.mark.special
    def test_zagier_zeta_closed_form(self):
        assert zagier_zeta(5, 2.0) == pytest.approx(12 * 5 ** -1.5, rel=1e-10)

    @pytest.mark.unit
    @pytest.mark.special
    @pytest.mark.parametrize("D", [5, 8, 13, 20])
    def test_zagier_zeta_check(self, D):
        lhs, rhs = zagier_zeta_check(D, 2.0, 10_000)
        assert lhs == pytest.approx(rhs, abs=1e-3)
        assert lhs <= rhs
        assert zagier_tail(D, 2.0, 10_000) == pytest.approx(rhs - lhs)

    @pytest.mark.unit
    @pytest.mark.special
    def test_primitive_zagier_zeta(self):
        """Z_20 = Z'_20 + 2^(-s) Z'_5, and Z'_D = Z_D for fundamental D."""
        assert primitive_zagier_zeta(5, 2.0) == pytest.approx(zagier_zeta(5, 2.0))
        total = primitive_zagier_zeta(20, 2.0) + 0.25 * primitive_zagier_zeta(5, 2.0)
        assert total == pytest.approx(zagier_zeta(20, 2.0), rel=1e-12)
