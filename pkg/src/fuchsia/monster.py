"""Loch Ness monster groups from windows ``a < b < c < d < e``.

Each window contributes two hyperbolic generators: ``f`` pairs the
half-circle over ``[a, b]`` with the one over ``[c, d]``, and ``g`` pairs
``[b, c]`` with ``[d, e]``. The integer-indexed family is truncated to a
contiguous run of windows; what happens beyond the run is declared by flags.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import IndexOutOfRange, InvalidWindow
from .geodesics import (
    HalfCircle,
    Region,
    Side,
    VerticalRay,
    exterior_region,
    geodesic_from_endpoints,
    pairing_map,
)
from .moebius import MoebiusMap

# Absolute tolerance for the gapless test e_n == a_{n+1}.
GAP_TOL = 1e-12


@dataclass(frozen=True)
class MonsterWindow:
    a: float
    b: float
    c: float
    d: float
    e: float

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d, self.e))

    def circles(self) -> tuple[HalfCircle, HalfCircle, HalfCircle, HalfCircle]:
        """``(sigma, sigma~, rho, rho~)``."""
        a, b, c, d, e = self
        return (
            geodesic_from_endpoints(a, b),
            geodesic_from_endpoints(c, d),
            geodesic_from_endpoints(b, c),
            geodesic_from_endpoints(d, e),
        )


@dataclass(frozen=True)
class MonsterSpec:
    """Windows indexed ``first_index, first_index + 1, ...``.

    Flags describe the untruncated family; ``None`` means undeclared.
    """

    windows: tuple[MonsterWindow, ...]
    first_index: int = 0
    gapless: Optional[bool] = None
    left_unbounded: Optional[bool] = None
    right_unbounded: Optional[bool] = None

    def __post_init__(self):
        object.__setattr__(
            self,
            "windows",
            tuple(w if isinstance(w, MonsterWindow) else MonsterWindow(*w) for w in self.windows),
        )

    def window(self, n: int) -> MonsterWindow:
        k = n - self.first_index
        if not 0 <= k < len(self.windows):
            raise IndexOutOfRange(f"window {n} is not represented")
        return self.windows[k]

    @property
    def indices(self) -> range:
        return range(self.first_index, self.first_index + len(self.windows))


@dataclass(frozen=True)
class MonsterGroup:
    spec: MonsterSpec
    pairs: tuple[tuple[MoebiusMap, MoebiusMap], ...]
    circles: tuple[tuple[HalfCircle, HalfCircle, HalfCircle, HalfCircle], ...]
    region: Region

    @property
    def generators(self) -> list[MoebiusMap]:
        return [m for pair in self.pairs for m in pair]


class KindVerdict(enum.Enum):
    FIRST_KIND = "FirstKind"
    SECOND_KIND = "SecondKind"
    UNKNOWN = "Unknown"


def window_violations(spec: MonsterSpec) -> list[str]:
    names = "abcde"
    out = []
    for n, w in zip(spec.indices, spec.windows):
        vals = tuple(w)
        for i in range(4):
            if not vals[i] < vals[i + 1]:
                out.append(
                    f"window {n}: {names[i]}_{n} < {names[i + 1]}_{n} fails "
                    f"({vals[i]!r} >= {vals[i + 1]!r})"
                )
    for (n, w), nxt in zip(zip(spec.indices, spec.windows), spec.windows[1:]):
        if not w.e <= nxt.a:
            out.append(f"windows {n},{n + 1}: e_{n} <= a_{n + 1} fails ({w.e!r} > {nxt.a!r})")
    return out


def validate_windows(spec: MonsterSpec) -> bool:
    return not window_violations(spec)


def monster_generators(w: MonsterWindow) -> tuple[MoebiusMap, MoebiusMap]:
    bad = window_violations(MonsterSpec((w,)))
    if bad:
        raise InvalidWindow(bad)
    sigma, sigma_t, rho, rho_t = w.circles()
    return pairing_map(sigma, sigma_t), pairing_map(rho, rho_t)


def build_monster(spec: MonsterSpec) -> MonsterGroup:
    bad = window_violations(spec)
    if bad:
        raise InvalidWindow(bad)
    circles = tuple(w.circles() for w in spec.windows)
    return MonsterGroup(
        spec=spec,
        pairs=tuple(monster_generators(w) for w in spec.windows),
        circles=circles,
        region=exterior_region([c for quad in circles for c in quad]),
    )


def first_kind_check(spec: MonsterSpec) -> KindVerdict:
    """First kind iff gapless and unbounded in both directions.

    A gap among the represented windows, or a declared gap or bound, settles
    second kind. Otherwise the flags must all be asserted true to conclude
    first kind; anything left undeclared gives ``UNKNOWN``.
    """
    bad = window_violations(spec)
    if bad:
        raise InvalidWindow(bad)
    ws = spec.windows
    if any(nxt.a - w.e > GAP_TOL for w, nxt in zip(ws, ws[1:])):
        return KindVerdict.SECOND_KIND
    flags = (spec.gapless, spec.left_unbounded, spec.right_unbounded)
    if any(f is False for f in flags):
        return KindVerdict.SECOND_KIND
    if all(f is True for f in flags):
        return KindVerdict.FIRST_KIND
    return KindVerdict.UNKNOWN


def strip(spec: MonsterSpec, n: int) -> Region:
    """The part of the fundamental region with ``a_n < Re z < e_n``."""
    w = spec.window(n)
    cons = [(c, Side.EXTERIOR) for c in w.circles()]
    cons.append((VerticalRay(w.a), Side.EXTERIOR))
    cons.append((VerticalRay(w.e), Side.INTERIOR))
    return Region(tuple(cons))
