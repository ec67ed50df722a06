"""Orbit enumeration, tiles of the tessellation, and limit-set sampling."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Optional

from .errors import BudgetExceeded
from .geodesics import Geodesic, Region, image_of_geodesic
from .moebius import INF, MapClass, MoebiusMap, classify, compose, fixed_points, inverse, tolerance

log = logging.getLogger(__name__)

DEFAULT_TILE_CAP = 100_000

Letter = tuple[str, int]  # (label, +1 or -1)


@dataclass(frozen=True)
class GroupPresentation:
    labels: tuple[str, ...]
    generators: tuple[MoebiusMap, ...]
    domain: Region
    boundary_arcs: tuple[Geodesic, ...]
    arc_labels: tuple[str, ...] = ()

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a presentation needs at least one generator")
        if len(self.labels) != len(self.generators):
            raise ValueError("one label per generator")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("generator labels must be unique")

    def letter_map(self, letter: Letter) -> MoebiusMap:
        label, sign = letter
        m = self.generators[self.labels.index(label)]
        return m if sign > 0 else inverse(m)


@dataclass(frozen=True)
class OrbitTile:
    word: tuple[Letter, ...]
    map: MoebiusMap
    arcs: tuple[Geodesic, ...]

    @property
    def name(self) -> str:
        if not self.word:
            return "1"
        return " ".join(lab if sign > 0 else f"{lab}^-1" for lab, sign in self.word)


def flute_presentation(group) -> GroupPresentation:
    from .flute import flute_polygon

    n = len(group.generators)
    arcs, arc_labels = [], []
    for k, (plus, minus) in enumerate(group.sides):
        arcs += [plus, minus]
        arc_labels += [f"g{k}+", f"g{k}-"]
    return GroupPresentation(
        labels=tuple(f"g{k}" for k in range(n)),
        generators=tuple(group.generators),
        domain=flute_polygon(group),
        boundary_arcs=tuple(arcs),
        arc_labels=tuple(arc_labels),
    )


def monster_presentation(group) -> GroupPresentation:
    labels, gens, arcs, arc_labels = [], [], [], []
    for n, (f, g), quad in zip(group.spec.indices, group.pairs, group.circles):
        labels += [f"f{n}", f"g{n}"]
        gens += [f, g]
        arcs += list(quad)
        arc_labels += [f"s{n}", f"s~{n}", f"r{n}", f"r~{n}"]
    return GroupPresentation(
        labels=tuple(labels),
        generators=tuple(gens),
        domain=group.region,
        boundary_arcs=tuple(arcs),
        arc_labels=tuple(arc_labels),
    )


class _MapIndex:
    """Tolerance-aware set of maps keyed by snapped entries."""

    def __init__(self, tol: float):
        self.tol = tol
        self.cells: dict[tuple[int, ...], list[MoebiusMap]] = {}

    def _scaled(self, m):
        # cells of width 2*tol: any match lies in the home cell or one neighbour per axis
        return [v / (2 * self.tol) for v in m.entries]

    def find(self, m: MoebiusMap) -> Optional[MoebiusMap]:
        choices = []
        for u in self._scaled(m):
            k = math.floor(u)
            choices.append((k, k - 1 if u - k < 0.5 else k + 1))
        for key in itertools.product(*choices):
            for other in self.cells.get(key, ()):
                if all(abs(x - y) <= self.tol for x, y in zip(m.entries, other.entries)):
                    return other
        return None

    def add(self, m: MoebiusMap) -> None:
        self.cells.setdefault(tuple(math.floor(u) for u in self._scaled(m)), []).append(m)


def enumerate_orbit(
    g: GroupPresentation,
    max_word_length: int,
    tile_cap: int = DEFAULT_TILE_CAP,
    collisions: Optional[list] = None,
) -> list[OrbitTile]:
    """Tiles for all freely reduced words up to ``max_word_length``.

    Breadth-first by word length; within a length, words are ordered
    lexicographically by letter, where letters run ``g0, g0^-1, g1, ...`` in
    generator order. A word whose map repeats an earlier tile is dropped and
    reported (to ``collisions`` if given, and to the log).
    """
    if max_word_length < 0:
        raise ValueError("max_word_length must be nonnegative")
    tol = tolerance()
    letters = [(lab, s) for lab in g.labels for s in (1, -1)]
    letter_maps = {lt: g.letter_map(lt) for lt in letters}

    ident = MoebiusMap.identity()
    tiles = [OrbitTile((), ident, g.boundary_arcs)]
    seen = _MapIndex(tol)
    seen.add(ident)
    frontier = [tiles[0]]
    for _ in range(max_word_length):
        nxt = []
        for tile in frontier:
            last = tile.word[-1] if tile.word else None
            for lt in letters:
                if last is not None and lt[0] == last[0] and lt[1] == -last[1]:
                    continue
                m = compose(tile.map, letter_maps[lt])
                word = tile.word + (lt,)
                if seen.find(m) is not None:
                    log.warning("relation detected: word %s repeats an earlier tile", word)
                    if collisions is not None:
                        collisions.append(word)
                    continue
                seen.add(m)
                new = OrbitTile(word, m, tuple(image_of_geodesic(m, a) for a in g.boundary_arcs))
                nxt.append(new)
                if len(tiles) + len(nxt) > tile_cap:
                    raise BudgetExceeded(f"more than {tile_cap} tiles")
        tiles += nxt
        frontier = nxt
    return tiles


def word_map(g: GroupPresentation, word) -> MoebiusMap:
    return reduce(compose, (g.letter_map(lt) for lt in word), MoebiusMap.identity())


def limit_set_sample(
    g: GroupPresentation, max_word_length: int, tile_cap: int = DEFAULT_TILE_CAP
) -> list[float]:
    """Boundary fixed points of the non-identity tiles, merged within tolerance.

    Sorted ascending, infinity last.
    """
    if max_word_length < 1:
        raise ValueError("max_word_length must be at least 1")
    tol = tolerance()
    pts = []
    for tile in enumerate_orbit(g, max_word_length, tile_cap):
        if not tile.word or classify(tile.map) in (MapClass.IDENTITY, MapClass.ELLIPTIC):
            continue
        pts.extend(fixed_points(tile.map))
    pts.sort()
    out: list[float] = []
    for p in pts:
        if out and (p == out[-1] or (p != INF and abs(p - out[-1]) <= tol * max(1.0, abs(p)))):
            continue
        out.append(p)
    return out
