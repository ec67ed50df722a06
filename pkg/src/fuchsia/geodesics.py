"""Complete geodesics of H^2 and regions cut out by them."""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Union

from .errors import CoincidentEndpoints, OverlappingCircles
from .moebius import INF, MoebiusMap, Point, apply, close

# Slack allowed when two circles are tangent at a shared real point.
TANGENCY_TOL = 1e-12


@dataclass(frozen=True)
class HalfCircle:
    center: float
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError(f"radius must be positive, got {self.radius}")

    @property
    def endpoints(self) -> tuple[float, float]:
        return (self.center - self.radius, self.center + self.radius)


@dataclass(frozen=True)
class VerticalRay:
    foot: float

    @property
    def endpoints(self) -> tuple[float, float]:
        return (self.foot, INF)


Geodesic = Union[HalfCircle, VerticalRay]


class Side(enum.Enum):
    EXTERIOR = "exterior"
    INTERIOR = "interior"


def geodesic_from_endpoints(p: float, q: float) -> Geodesic:
    p, q = float(p), float(q)
    if p == q:
        raise CoincidentEndpoints(f"endpoints coincide at {p}")
    if math.isinf(p):
        return VerticalRay(q)
    if math.isinf(q):
        return VerticalRay(p)
    return HalfCircle((p + q) / 2.0, abs(p - q) / 2.0)


def ext_contains(g: Geodesic, w: complex) -> bool:
    """Strict exterior membership.

    The exterior of a vertical ray at ``x0`` is the half-plane ``Re(w) > x0``.
    """
    if isinstance(g, VerticalRay):
        return w.real > g.foot
    return abs(w - g.center) > g.radius


def int_contains(g: Geodesic, w: complex) -> bool:
    if isinstance(g, VerticalRay):
        return w.real < g.foot
    return abs(w - g.center) < g.radius


def _closed_ext(g, w):
    if isinstance(g, VerticalRay):
        return w.real >= g.foot
    return abs(w - g.center) >= g.radius


def _closed_int(g, w):
    if isinstance(g, VerticalRay):
        return w.real <= g.foot
    return abs(w - g.center) <= g.radius


@dataclass(frozen=True)
class Region:
    """Intersection of sides of geodesics.

    With ``closed=False`` (the default) points on a bounding geodesic are not
    members; ``closed=True`` tests the closure instead.
    """

    constraints: tuple[tuple[Geodesic, Side], ...]
    closed: bool = False

    def contains(self, w: complex) -> bool:
        if w.imag <= 0:
            return False
        for g, side in self.constraints:
            if side is Side.EXTERIOR:
                ok = _closed_ext(g, w) if self.closed else ext_contains(g, w)
            else:
                ok = _closed_int(g, w) if self.closed else int_contains(g, w)
            if not ok:
                return False
        return True

    def __contains__(self, w: complex) -> bool:
        return self.contains(w)

    def closure(self) -> Region:
        return Region(self.constraints, closed=True)

    def geodesics(self) -> list[Geodesic]:
        return [g for g, _ in self.constraints]


def exterior_region(circles, closed: bool = False) -> Region:
    return Region(tuple((g, Side.EXTERIOR) for g in circles), closed)


def image_of_geodesic(m: MoebiusMap, g: Geodesic) -> Geodesic:
    p, q = g.endpoints
    return geodesic_from_endpoints(apply(m, p), apply(m, q))


def same_geodesic(g1: Geodesic, g2: Geodesic, tol: float | None = None) -> bool:
    """Compare by endpoint sets."""
    if type(g1) is not type(g2):
        return False
    return all(close(x, y, tol) for x, y in zip(sorted(g1.endpoints), sorted(g2.endpoints)))


def mutually_exterior(circles) -> bool:
    """Pairwise disjoint half-circles, each outside the others.

    Tangency at a real point is allowed; overlap and nesting are not.
    """
    for g, h in itertools.combinations(circles, 2):
        if abs(g.center - h.center) < g.radius + h.radius - TANGENCY_TOL:
            return False
    return True


def pairing_map(src: HalfCircle, dst: HalfCircle) -> MoebiusMap:
    """The hyperbolic map ``z -> -r r~ / (z - O) + O~`` carrying ``src`` onto ``dst``.

    ``src`` must lie strictly to the left of ``dst``. The left endpoint of
    ``src`` goes to the right endpoint of ``dst`` and vice versa, so the
    exterior of ``src`` lands inside ``dst``.
    """
    if not (isinstance(src, HalfCircle) and isinstance(dst, HalfCircle)):
        raise OverlappingCircles("pairing requires two half-circles")
    a, b = src.endpoints
    c, d = dst.endpoints
    if not b < c:
        raise OverlappingCircles(
            f"need a < b < c < d, got src=({a}, {b}) dst=({c}, {d})"
        )
    O, r = src.center, src.radius
    Ot, rt = dst.center, dst.radius
    return MoebiusMap(Ot, -r * rt - O * Ot, 1.0, -O)


def pairing_discriminant(src: HalfCircle, dst: HalfCircle) -> float:
    """``(O - O~)^2 - 4 r r~``, positive exactly when the pairing is hyperbolic."""
    return (src.center - dst.center) ** 2 - 4.0 * src.radius * dst.radius


def pairing_fixed_point_quadratic(src: HalfCircle, dst: HalfCircle) -> tuple[float, float, float]:
    """Coefficients of ``z^2 - (O + O~) z + (O O~ + r r~)``."""
    O, r, Ot, rt = src.center, src.radius, dst.center, dst.radius
    return (1.0, -(O + Ot), O * Ot + r * rt)


def point_on(g: Geodesic, t: float) -> Point:
    """A point on ``g``: angle ``t`` in (0, pi) for circles, height ``t`` for rays."""
    if isinstance(g, VerticalRay):
        return complex(g.foot, t)
    return complex(g.center + g.radius * math.cos(t), g.radius * math.sin(t))
