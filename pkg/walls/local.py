"""
Local polynomials of F_{1-k,D} on the components of H minus E_D, and the
jump across a single wall.

On a component C the function is F = (non-polynomial part) + P_C(tau), with

    P_C(X)    = c_inf + (1 + (-1)^k) 2^(2-2k) D^(1/2-k) sum_{a<0, tau inside S_Q} Q(X,1)^(k-1)
    P_{C,A}(X) = c_inf(A) - (-1)^k 2^(2-2k) D^(1/2-k) sum_{Q in A, tau inside S_Q} sgn(a) Q(X,1)^(k-1)

where "tau inside S_Q" holds for Q and -Q alike.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

from config.models import EvalParams
from core.arithmetic import as_discriminant
from core.errors import DomainError, WallCollisionError
from core.polynomials import CPoly, poly_sum
from core.types import Point
from modeval.evaluators import DiscLike, check_weight
from qforms.forms import QForm, wall_distance
from qforms.geometry import ComponentSignature, interior_forms, signature_hash, walls_through
from qforms.reduction import NarrowClass
from walls.constants import c_inf, c_inf_class

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WallReport:
    """Component of a point with its local polynomial."""
    tau: Point
    signature: ComponentSignature
    poly: CPoly
    c_inf_part: float
    k: int = field(default=2)

    @property
    def signature_hash(self) -> str:
        return signature_hash(self.signature)

    def value_at(self, tau: Optional[Point] = None) -> complex:
        """P_C evaluated at tau (default: the report's own point)."""
        return self.poly((tau or self.tau).tau)

    def to_dict(self) -> dict:
        return {
            "tau": [self.tau.x, self.tau.y],
            "k": self.k,
            "signature": self.signature.to_list(),
            "signature_hash": self.signature_hash,
            "c_inf": self.c_inf_part,
            "poly": [[complex(c).real, complex(c).imag] for c in self.poly.coeffs],
        }


def _wall_factor(k: int, D: int) -> float:
    return 2.0 ** (2 - 2 * k) * D ** (0.5 - k)


def _require_off_wall(D: int, tau: Point, params: EvalParams) -> None:
    hits = walls_through(D, tau, params.wall_margin)
    if hits:
        raise WallCollisionError(f"{tau} lies within {params.wall_margin:g} of a wall", hits)


def local_poly(k: int, D: DiscLike, tau: Point, params: Optional[EvalParams] = None) -> CPoly:
    """
    P_C for the component C containing tau.

    Raises:
        WallCollisionError: If tau is within params.wall_margin of a wall
    """
    return wall_report(k, D, tau, params).poly


def wall_report(k: int, D: DiscLike, tau: Point, params: Optional[EvalParams] = None) -> WallReport:
    check_weight(k)
    params = params or EvalParams()
    disc = as_discriminant(D)
    _require_off_wall(disc.D, tau, params)
    signature = interior_forms(disc, tau)
    constant = c_inf(disc, k, params)
    weight = (1 + (-1) ** k) * _wall_factor(k, disc.D)
    body = poly_sum(CPoly.from_quadratic(*Q) ** (k - 1) for Q in signature)
    poly = CPoly.constant(constant) + body.scale(weight)
    logger.debug(f"local_poly k={k} D={disc.D} at {tau}: {len(signature)} interior forms")
    return WallReport(tau, signature, poly, constant, k)


def local_poly_class(k: int, A: NarrowClass, tau: Point, params: Optional[EvalParams] = None) -> CPoly:
    """
    P_{C,A} for the class A; (-1)^k times the sum over classes gives local_poly for even k.

    Raises:
        WallCollisionError: If tau is within params.wall_margin of a wall
    """
    check_weight(k)
    params = params or EvalParams()
    _require_off_wall(A.D, tau, params)
    sign = (-1) ** k
    inside = []
    for Q in interior_forms(A.D, tau):
        inside.extend(P for P in (Q, -Q) if A.contains(P))
    body = poly_sum((CPoly.from_quadratic(*P) ** (k - 1)).scale(P.sgn_a) for P in inside)
    return CPoly.constant(c_inf_class(A, k, params)) - body.scale(sign * _wall_factor(k, A.D))


def jump_poly(k: int, D: DiscLike, Q: QForm) -> CPoly:
    """The polynomial F(below) - F(above) across S_Q as a function of X."""
    check_weight(k)
    disc = as_discriminant(D)
    if Q.disc != disc.D:
        raise DomainError(f"{Q} does not have discriminant {disc.D}")
    weight = -(1 + (-1) ** k) * _wall_factor(k, disc.D) * Q.sgn_a
    return (CPoly.from_quadratic(*Q) ** (k - 1)).scale(weight)


def wall_jump(k: int, D: DiscLike, Q: QForm, tau_on_wall: Point, params: Optional[EvalParams] = None) -> complex:
    """
    lim_{w->0+} F(tau - iw) - F(tau + iw) for tau on S_Q and on no other wall.

    Both Q and -Q cross at S_Q; their contributions are combined in the
    factor 1 + (-1)^k, so the result is the same for Q and -Q.

    Raises:
        DomainError: If tau is not on S_Q
        WallCollisionError: If tau also lies on another wall
    """
    params = params or EvalParams()
    disc = as_discriminant(D)
    if wall_distance(Q, tau_on_wall) > params.wall_margin:
        raise DomainError(f"{tau_on_wall} is not on the wall of {Q}")
    normalised = Q if Q.a > 0 else -Q
    others = [P for P in walls_through(disc, tau_on_wall, params.wall_margin) if P != normalised]
    if others:
        raise WallCollisionError(f"{tau_on_wall} lies on several walls", (normalised, *others))
    return complex(jump_poly(k, disc, Q)(tau_on_wall.tau))
