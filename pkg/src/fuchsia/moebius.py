"""Moebius transformations of the upper half-plane.

Interior points of H^2 are Python ``complex`` numbers with positive imaginary
part. Boundary points are real ``float`` values, with ``math.inf`` standing for
the point at infinity.
"""

from __future__ import annotations

import cmath
import enum
import math
import os
from dataclasses import dataclass
from typing import Union

from .errors import IdentityHasAllPoints, NonPositiveDeterminant, NotHyperbolic

INF = math.inf

# Relative tolerance on ad - bc, measured against |ad| + |bc|.
DET_RTOL = 1e-12

Point = Union[complex, float]


def tolerance() -> float:
    """Comparison tolerance, overridable via ``FUCHSIA_TOLERANCE``."""
    raw = os.environ.get("FUCHSIA_TOLERANCE")
    return float(raw) if raw else 1e-9


def close(x: float, y: float, tol: float | None = None) -> bool:
    """Absolute tolerance near zero, relative for large magnitudes."""
    if tol is None:
        tol = tolerance()
    if math.isinf(x) or math.isinf(y):
        return x == y
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


def uhp(x: float, y: float) -> complex:
    if not y > 0:
        raise ValueError(f"point must lie in the upper half-plane, got y={y}")
    return complex(x, y)


class MapClass(enum.Enum):
    IDENTITY = "Identity"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"


def _canonical_sign(a, b, c, d):
    for v in (a, b, c, d):
        if v != 0:
            if v < 0:
                return -a, -b, -c, -d
            break
    return a, b, c, d


@dataclass(frozen=True)
class MoebiusMap:
    """An element of PSL(2, R), stored as a normalized real 2x2 matrix.

    Construction normalizes: the entries are rescaled to determinant one
    (unless already unimodular within ``DET_RTOL``) and the sign is fixed so
    the first nonzero entry of ``(a, b, c, d)`` is positive.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        a, b, c, d = (float(v) for v in (self.a, self.b, self.c, self.d))
        ad, bc = a * d, b * c
        det = ad - bc
        if not det > 0:
            raise NonPositiveDeterminant(f"determinant {det!r} is not positive")
        if abs(det - 1.0) > DET_RTOL * max(1.0, abs(ad) + abs(bc)):
            k = math.sqrt(det)
            a, b, c, d = a / k, b / k, c / k, d / k
        a, b, c, d = _canonical_sign(a, b, c, d)
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, v + 0.0)  # drop negative zeros

    @classmethod
    def identity(cls) -> MoebiusMap:
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def entries(self) -> tuple[float, float, float, float]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> float:
        return self.a + self.d

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        return compose(self, other)

    def __call__(self, p: Point) -> Point:
        return apply(self, p)

    def inverse(self) -> MoebiusMap:
        return inverse(self)

    def isclose(self, other: MoebiusMap, tol: float | None = None) -> bool:
        return all(close(x, y, tol) for x, y in zip(self.entries, other.entries))


def normalize(a: float, b: float, c: float, d: float) -> MoebiusMap:
    return MoebiusMap(a, b, c, d)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    """The map ``z -> m1(m2(z))``."""
    return MoebiusMap(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def inverse(m: MoebiusMap) -> MoebiusMap:
    return MoebiusMap(m.d, -m.b, -m.c, m.a)


def apply(m: MoebiusMap, p: Point) -> Point:
    if isinstance(p, complex):
        return (m.a * p + m.b) / (m.c * p + m.d)
    x = float(p)
    if math.isinf(x):
        if m.c == 0:
            return INF
        out = m.a / m.c
        return INF if math.isinf(out) else out
    den = m.c * x + m.d
    if den == 0:
        return INF
    out = (m.a * x + m.b) / den
    return INF if math.isinf(out) else out


def classify(m: MoebiusMap, tol: float | None = None) -> MapClass:
    if tol is None:
        tol = tolerance()
    if all(abs(u - v) <= tol for u, v in zip(m.entries, (1.0, 0.0, 0.0, 1.0))):
        return MapClass.IDENTITY
    t = abs(m.trace)
    if abs(t - 2.0) <= tol:
        return MapClass.PARABOLIC
    return MapClass.HYPERBOLIC if t > 2.0 else MapClass.ELLIPTIC


def fixed_points(m: MoebiusMap, tol: float | None = None) -> list[Point]:
    """Fixed points of a non-identity map.

    Hyperbolic maps give two boundary points, parabolic maps one, elliptic
    maps a single interior point. Finite boundary points come sorted, with
    infinity last.
    """
    kind = classify(m, tol)
    if kind is MapClass.IDENTITY:
        raise IdentityHasAllPoints("the identity fixes every point")
    a, b, c, d = m.entries
    if c == 0:
        # z -> (a z + b) / d; a = d forces a parabolic translation
        if kind is MapClass.PARABOLIC or a == d:
            return [INF]
        return [b / (d - a), INF]
    # c z^2 + (d - a) z - b = 0, discriminant (a + d)^2 - 4
    B = d - a
    if kind is MapClass.PARABOLIC:
        return [(a - d) / (2 * c) + 0.0]
    disc = m.trace**2 - 4.0
    if kind is MapClass.ELLIPTIC:
        z = (-B + cmath.sqrt(disc)) / (2 * c)
        return [z if z.imag > 0 else z.conjugate()]
    root = math.sqrt(disc)
    q = -0.5 * (B + math.copysign(root, B))
    return sorted([q / c + 0.0, -b / q + 0.0])


def translation_length(m: MoebiusMap, tol: float | None = None) -> float:
    """Displacement along the axis of a hyperbolic map, 2 arccosh(|tr|/2)."""
    if classify(m, tol) is not MapClass.HYPERBOLIC:
        raise NotHyperbolic(f"trace {m.trace!r} is not hyperbolic")
    return 2.0 * math.acosh(abs(m.trace) / 2.0)
