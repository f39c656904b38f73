"""
Closed forms for the hyperbolic building blocks phi, psi and the complete beta
value, plus the upper incomplete gamma function at integer order.

phi and psi accept scalars or numpy arrays; they sit in the innermost loop of
the F evaluator.
"""

import math
from functools import lru_cache
from typing import Union

import numpy as np

from core.errors import DomainError

ArrayLike = Union[float, np.ndarray]

# psi switches from its power series to the phi closed form above this argument
PSI_SERIES_CUTOFF = 0.5
_PSI_SERIES_TERMS = 64
_DOMAIN_SLACK = 1e-12


def _check_k(k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 2:
        raise DomainError(f"k must be an integer >= 2, got {k}")


@lru_cache(maxsize=64)
def _phi_coefficients(k: int) -> np.ndarray:
    """[C(2k-2,k-1), -C(2k-2,k-2)/1, +C(2k-2,k-3)/2, ...] scaled by 2^(2-2k)."""
    n = 2 * k - 2
    coeffs = [math.comb(n, k - 1)]
    for j in range(1, k):
        coeffs.append((-1) ** j * math.comb(n, k - 1 - j) / j)
    arr = np.asarray(coeffs, dtype=float) * 2.0 ** (2 - 2 * k)
    arr.setflags(write=False)
    return arr


def phi(v: ArrayLike, k: int) -> ArrayLike:
    """
    phi(v) = integral_0^v sin(u)^(2k-2) du for 0 <= v <= pi/2.

    Uses the finite Fourier expansion of sin^(2k-2):
    2^(2-2k) [C(2k-2,k-1) v + sum_j (-1)^j C(2k-2,k-1-j) sin(2jv)/j].
    """
    _check_k(k)
    v_arr = np.asarray(v, dtype=float)
    if np.any(v_arr < -_DOMAIN_SLACK) or np.any(v_arr > math.pi / 2 + _DOMAIN_SLACK):
        raise DomainError("phi is defined on [0, pi/2]")
    c = _phi_coefficients(k)
    result = c[0] * v_arr
    for j in range(1, k):
        result = result + c[j] * np.sin(2 * j * v_arr)
    return float(result) if np.ndim(result) == 0 else result


@lru_cache(maxsize=64)
def _psi_series_coefficients(k: int) -> np.ndarray:
    """(1/2)_n / (n! (k - 1/2 + n)) for n = 0..terms-1, halved."""
    out = np.empty(_PSI_SERIES_TERMS)
    poch = 1.0
    for n in range(_PSI_SERIES_TERMS):
        out[n] = 0.5 * poch / (k - 0.5 + n)
        poch *= (0.5 + n) / (n + 1)
    out.setflags(write=False)
    return out


def psi(t: ArrayLike, k: int) -> ArrayLike:
    """
    psi(t) = (1/2) B(t; k - 1/2, 1/2) for 0 < t <= 1.

    Small t uses the binomial series of (1 - u)^(-1/2) integrated termwise;
    the closed form phi(arcsin sqrt t) cancels badly there. Larger t uses the
    closed form, which is exact at t = 1.
    """
    _check_k(k)
    scalar = np.ndim(t) == 0
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    if np.any(t_arr < 0) or np.any(t_arr > 1 + _DOMAIN_SLACK):
        raise DomainError("psi is defined on (0, 1]")
    t_arr = np.minimum(t_arr, 1.0)
    out = np.empty_like(t_arr)

    small = t_arr <= PSI_SERIES_CUTOFF
    if np.any(small):
        ts = t_arr[small]
        coeffs = _psi_series_coefficients(k)
        acc = np.zeros_like(ts)
        # Horner in t over the series coefficients
        for c in coeffs[::-1]:
            acc = acc * ts + c
        out[small] = acc * ts ** (k - 0.5)
    big = ~small
    if np.any(big):
        out[big] = phi(np.arcsin(np.sqrt(t_arr[big])), k)
    return float(out[0]) if scalar else out.reshape(np.shape(t))


def beta_complete(k: int) -> float:
    """B(k - 1/2, 1/2) = C(2k-2, k-1) 2^(2-2k) pi."""
    _check_k(k)
    return math.comb(2 * k - 2, k - 1) * 2.0 ** (2 - 2 * k) * math.pi


def upper_incomplete_gamma(s: int, x: ArrayLike) -> ArrayLike:
    """
    Gamma(s, x) = (s-1)! e^(-x) sum_{j<s} x^j/j! for integer s >= 1.
    """
    if not isinstance(s, (int, np.integer)) or s < 1:
        raise DomainError(f"order must be a positive integer, got {s}")
    x_arr = np.asarray(x, dtype=float)
    if np.any(x_arr < 0):
        raise DomainError("upper_incomplete_gamma needs x >= 0")
    term = np.ones_like(x_arr)
    total = np.ones_like(x_arr)
    for j in range(1, s):
        term = term * x_arr / j
        total = total + term
    result = math.factorial(s - 1) * np.exp(-x_arr) * total
    return float(result) if np.ndim(result) == 0 else result
