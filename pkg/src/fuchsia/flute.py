"""Zero-twist tight flute groups built from a positive sequence.

A sequence ``x_0, x_1, ...`` gives partial sums ``s_n``; the generator ``g_n``
pairs the half-circle over ``[s_{n-1}, s_n]`` with its mirror image over
``[-s_n, -s_{n-1}]`` (with ``s_{-1} = 0``). Infinite sequences are handled as
a finite prefix plus a tail law whose series behaviour is known analytically.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import IndexOutOfRange, InsufficientData, UnknownType
from .geodesics import HalfCircle, Region, Side, geodesic_from_endpoints
from .moebius import MoebiusMap, tolerance


@dataclass(frozen=True)
class ConstantTail:
    c: float

    def term(self, k: int) -> float:
        return self.c

    @property
    def divergent(self) -> Optional[bool]:
        return True

    def total(self) -> Optional[float]:
        return None


@dataclass(frozen=True)
class GeometricTail:
    first: float
    ratio: float

    def term(self, k: int) -> float:
        return self.first * self.ratio**k

    @property
    def divergent(self) -> Optional[bool]:
        return self.ratio >= 1

    def total(self) -> Optional[float]:
        return None if self.divergent else self.first / (1.0 - self.ratio)


@dataclass(frozen=True)
class HarmonicTail:
    scale: float

    def term(self, k: int) -> float:
        return self.scale / (k + 1)

    @property
    def divergent(self) -> Optional[bool]:
        return True

    def total(self) -> Optional[float]:
        return None


@dataclass(frozen=True)
class CustomTail:
    """A tail whose terms are not modelled; only its series verdict is known.

    ``limit`` optionally carries the tail's sum when it converges.
    """

    divergent: Optional[bool] = None
    limit: Optional[float] = None

    def term(self, k: int) -> float:
        raise InsufficientData("custom tails carry no term formula")

    def total(self) -> Optional[float]:
        return self.limit


Tail = Union[ConstantTail, GeometricTail, HarmonicTail, CustomTail]


@dataclass(frozen=True)
class SequenceSpec:
    prefix: tuple[float, ...]
    tail: Optional[Tail] = None

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(float(v) for v in self.prefix))
        if any(not v > 0 for v in self.prefix):
            raise ValueError("sequence entries must be positive")
        t = self.tail
        params = {
            ConstantTail: lambda: [t.c],
            GeometricTail: lambda: [t.first, t.ratio],
            HarmonicTail: lambda: [t.scale],
            CustomTail: lambda: [],
        }
        if t is not None and any(not v > 0 for v in params[type(t)]()):
            raise ValueError("tail parameters must be positive")

    def term(self, n: int) -> float:
        if n < len(self.prefix):
            return self.prefix[n]
        if self.tail is None:
            raise InsufficientData(
                f"term {n} requested but only {len(self.prefix)} given and no tail law"
            )
        return self.tail.term(n - len(self.prefix))

    def terms(self, n_terms: int) -> list[float]:
        return [self.term(n) for n in range(n_terms)]


class TypeVerdict(enum.Enum):
    FIRST_KIND_PARABOLIC = "FirstKindParabolic"
    SECOND_KIND_NON_PARABOLIC = "SecondKindNonParabolic"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TypeResult:
    verdict: TypeVerdict
    limit: Optional[float] = None  # lim s_n when finite and known


@dataclass(frozen=True)
class FluteGroup:
    spec: SequenceSpec
    s: tuple[float, ...]
    generators: tuple[MoebiusMap, ...]
    sides: tuple[tuple[HalfCircle, HalfCircle], ...]  # (gamma_n^+, gamma_n^-)

    @property
    def x(self) -> list[float]:
        return [b - a for a, b in zip((0.0,) + self.s, self.s)]


def partial_sums(spec: SequenceSpec, n_terms: int) -> list[float]:
    if n_terms < 1:
        raise ValueError("n_terms must be at least 1")
    out, total = [], 0.0
    for x in spec.terms(n_terms):
        total += x
        out.append(total)
    return out


def _check_index(n, s, lo=0):
    if not lo <= n < len(s):
        raise IndexOutOfRange(f"index {n} outside [{lo}, {len(s)})")


def flute_matrix(n: int, s) -> tuple:
    """Unnormalized entries of ``g_n``. Works with floats or ``Fraction``s."""
    _check_index(n, s)
    prev = s[n - 1] if n > 0 else 0 * s[0]
    gap = s[n] - prev
    diag = 1 + 2 * prev / gap
    return (diag, -2 * prev * (1 + prev / gap), -2 / gap, diag)


def flute_generator(n: int, s) -> MoebiusMap:
    return MoebiusMap(*flute_matrix(n, s))


def flute_sides(n: int, s) -> tuple[HalfCircle, HalfCircle]:
    _check_index(n, s)
    prev = s[n - 1] if n > 0 else 0.0
    return (
        geodesic_from_endpoints(prev, s[n]),
        geodesic_from_endpoints(-prev, -s[n]),
    )


def build_flute(spec: SequenceSpec, n_generators: int) -> FluteGroup:
    if n_generators < 1:
        raise ValueError("need at least one generator")
    s = tuple(partial_sums(spec, n_generators))
    return FluteGroup(
        spec=spec,
        s=s,
        generators=tuple(flute_generator(n, s) for n in range(n_generators)),
        sides=tuple(flute_sides(n, s) for n in range(n_generators)),
    )


def length_param(n: int, s) -> float:
    """Length of the n-th gluing geodesic, ``n >= 1``.

    Evaluates ``ln((s' + s + 2 sqrt(s' s)) / (s' + s - 2 sqrt(s' s)))`` with
    ``s' = s_{n-1}``, rewritten as ``2 ln((sqrt s + sqrt s')^2 / (s - s'))`` so
    the small denominator does not cancel.
    """
    _check_index(n, s, lo=1)
    prev, cur = s[n - 1], s[n]
    if not cur > prev:
        raise ValueError("partial sums must be strictly increasing")
    return 2.0 * (2.0 * math.log(math.sqrt(prev) + math.sqrt(cur)) - math.log(cur - prev))


def basmajian_term(n: int, s) -> float:
    """``exp(-l_n / 2)``; its series diverges exactly for parabolic flutes."""
    return math.exp(-0.5 * length_param(n, s))


def basmajian_closed_form(n: int, s) -> float:
    _check_index(n, s, lo=1)
    prev, cur = s[n - 1], s[n]
    return (cur - prev) / (math.sqrt(prev) + math.sqrt(cur)) ** 2


def classify_type(spec: SequenceSpec) -> TypeResult:
    """Decide first kind / parabolicity from the declared tail law.

    Finite data never decides a series, so a spec without a tail (or with an
    undecided custom tail) is ``UNKNOWN``.
    """
    tail = spec.tail
    if tail is None or tail.divergent is None:
        return TypeResult(TypeVerdict.UNKNOWN)
    if tail.divergent:
        return TypeResult(TypeVerdict.FIRST_KIND_PARABOLIC)
    rest = tail.total()
    limit = None if rest is None else math.fsum(spec.prefix) + rest
    return TypeResult(TypeVerdict.SECOND_KIND_NON_PARABOLIC, limit)


def convex_core_boundary(spec: SequenceSpec) -> Optional[HalfCircle]:
    """Half-circle through ``-a`` and ``a`` for second-kind groups, else ``None``."""
    res = classify_type(spec)
    if res.verdict is TypeVerdict.UNKNOWN:
        raise UnknownType("series behaviour of the spec is undecided")
    if res.verdict is TypeVerdict.FIRST_KIND_PARABOLIC:
        return None
    if res.limit is None:
        raise UnknownType("convergent tail without a known sum")
    return HalfCircle(0.0, res.limit)


def flute_polygon(group: FluteGroup, with_core: bool = False, closed: bool = False) -> Region:
    """Exterior of all built sides; optionally cut by the convex-core boundary."""
    cons = []
    for plus, minus in group.sides:
        cons.append((plus, Side.EXTERIOR))
        cons.append((minus, Side.EXTERIOR))
    if with_core:
        core = convex_core_boundary(group.spec)
        if core is not None:
            cons.append((core, Side.INTERIOR))
    return Region(tuple(cons), closed)


def is_integral(group: FluteGroup, tol: float | None = None) -> bool:
    if tol is None:
        tol = tolerance()
    return all(
        abs(v - round(v)) <= tol for g in group.generators for v in g.entries
    )


def exact_integral(x) -> bool:
    """Exact rational check that every generator of the sequence is integral."""
    s, total = [], Fraction(0)
    for v in x:
        total += Fraction(v)
        s.append(total)
    return all(
        v.denominator == 1 for n in range(len(s)) for v in flute_matrix(n, s)
    )


def growth_diagnostic(spec: SequenceSpec) -> dict:
    """Advisory numbers for a spec whose type is undecided."""
    s = partial_sums(spec, len(spec.prefix)) if spec.prefix else []
    out = {"n_terms": len(s), "s_last": s[-1] if s else 0.0}
    if len(s) >= 4:
        half = len(s) // 2
        out["late_mean_term"] = (s[-1] - s[half - 1]) / (len(s) - half)
        out["early_mean_term"] = s[half - 1] / half
    return out
