"""
Wall geometry of the exceptional set E_D: which semicircles S_Q contain a
point in their interior, which pass through it, and how far the closest is.
"""

import hashlib
import logging
import math
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple, Union

from core.arithmetic import as_discriminant
from core.errors import DomainError
from core.types import Discriminant, Point
from qforms.forms import QForm, geodesic_value, on_wall, wall_distance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComponentSignature:
    """The forms with a < 0 whose geodesic disk contains the point."""
    interior_forms: FrozenSet[QForm]

    def __len__(self) -> int:
        return len(self.interior_forms)

    def __iter__(self):
        return iter(sorted(self.interior_forms))

    @property
    def is_cusp_component(self) -> bool:
        """True for the component containing i*infinity."""
        return not self.interior_forms

    def to_list(self) -> List[list]:
        return [Q.to_list() for Q in self]


def signature_hash(signature: ComponentSignature) -> str:
    """Short stable digest identifying a connected component."""
    text = ";".join(repr(Q) for Q in signature)
    return hashlib.sha1(text.encode("ascii")).hexdigest()[:12]


def _candidates(D: int, tau: Point, widen: float) -> List[QForm]:
    """Forms with a < 0 whose circle reaches height y - widen above a window around x."""
    sd = math.sqrt(D)
    height = tau.y - widen
    if height <= 0:
        raise DomainError("margin exceeds the height of the point")
    out = []
    m = 1
    while sd / (2 * m) > height:
        # centre b/2m within radius + widen of x
        lo = math.ceil(2 * m * (tau.x - widen) - sd)
        hi = math.floor(2 * m * (tau.x + widen) + sd)
        for b in range(lo, hi + 1):
            if (b * b - D) % (4 * m) == 0:
                out.append(QForm(-m, b, (b * b - D) // (-4 * m)))
        m += 1
    return out


def interior_forms(D: Union[int, Discriminant], tau: Point) -> ComponentSignature:
    """
    All Q = [a, b, c] with a < 0 and a|tau|^2 + bx + c > 0.

    Only |a| < sqrt(D)/2y can contribute, and for each such a the centre
    -b/2a must lie within sqrt(D)/2|a| of x, so the scan is finite and exact.
    """
    disc = as_discriminant(D)
    inside = frozenset(Q for Q in _candidates(disc.D, tau, 0.0) if geodesic_value(Q, tau) > 0)
    return ComponentSignature(inside)


def walls_through(D: Union[int, Discriminant], tau: Point, margin: float = 0.0) -> Tuple[QForm, ...]:
    """
    Forms with a > 0 whose wall passes within `margin` of tau.

    With margin 0 the geodesic value must vanish to the relative precision
    ON_WALL_RTOL that the lattice kernels use for sgn = 0.
    """
    disc = as_discriminant(D)
    widen = min(margin, 0.5 * tau.y)
    hits = []
    for Q in _candidates(disc.D, tau, widen):
        if margin == 0.0:
            if on_wall(Q, tau):
                hits.append(-Q)
        elif wall_distance(Q, tau) < margin:
            hits.append(-Q)
    return tuple(sorted(hits))


def nearest_wall(D: Union[int, Discriminant], tau: Point) -> Tuple[float, Optional[QForm]]:
    """
    Distance from tau to the closest wall, with that wall's form (a > 0).

    Circles of radius below y/2 stay farther than y/2 from tau, so only larger
    circles are scanned; when none is closer the result is (y/2, None), a
    lower bound.
    """
    disc = as_discriminant(D)
    best: Tuple[float, Optional[QForm]] = (0.5 * tau.y, None)
    sd = math.sqrt(disc.D)
    m = 1
    while sd / (2 * m) >= 0.5 * tau.y:
        reach = sd + 2 * m * best[0]
        lo = math.ceil(2 * m * tau.x - reach)
        hi = math.floor(2 * m * tau.x + reach)
        for b in range(lo, hi + 1):
            if (b * b - disc.D) % (4 * m) == 0:
                Q = QForm(m, b, (b * b - disc.D) // (4 * m))
                dist = wall_distance(Q, tau)
                if dist < best[0]:
                    best = (dist, Q)
        m += 1
    return best
