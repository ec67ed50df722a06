"""Invariant checks run by ``fuchsia check``.

Each function returns a list of human-readable violations; empty means pass.
"""

from __future__ import annotations

import math

import numpy as np

from . import flute as fl
from . import monster as mo
from .geodesics import image_of_geodesic, mutually_exterior, same_geodesic
from .moebius import MapClass, apply, classify, close, fixed_points, translation_length
from .tess import enumerate_orbit, flute_presentation, monster_presentation, word_map


def sample_region(region, n: int, box: tuple[float, float, float], seed: int = 0) -> list[complex]:
    """Rejection-sample ``n`` points of ``region`` inside ``[xmin, xmax] x (0, ymax]``.

    Heights are log-uniform so the cusps near the real axis get visited.
    """
    xmin, xmax, ymax = box
    rng = np.random.default_rng(seed)
    out: list[complex] = []
    for _ in range(1000):
        xs = rng.uniform(xmin, xmax, 4 * n)
        ys = ymax * np.exp(rng.uniform(math.log(1e-3), 0.0, 4 * n))
        for x, y in zip(xs, ys):
            z = complex(x, y)
            if region.contains(z):
                out.append(z)
                if len(out) == n:
                    return out
    raise RuntimeError("region too thin to sample")


def _box(arcs):
    ends = [p for g in arcs for p in g.endpoints if math.isfinite(p)]
    lo, hi = min(ends), max(ends)
    span = hi - lo
    return (lo - 0.5 * span, hi + 0.5 * span, 1.5 * span)


def side_pairing_violations(pres, n_points: int = 500, depth: int = 2, seed: int = 0) -> list[str]:
    pts = sample_region(pres.domain, n_points, _box(pres.boundary_arcs), seed)
    bad = []
    for tile in enumerate_orbit(pres, depth)[1:]:
        for p in pts:
            q = apply(tile.map, p)
            if pres.domain.contains(q):
                bad.append(f"word {tile.name} keeps {p} in the region (image {q})")
    return bad


def flute_violations(group: fl.FluteGroup, depth: int = 2, n_points: int = 200) -> list[str]:
    bad = []
    s = group.s
    for n, (g, (plus, minus)) in enumerate(zip(group.generators, group.sides)):
        if abs(g.det - 1) > 1e-12 * max(1.0, abs(g.a * g.d) + abs(g.b * g.c)):
            bad.append(f"g{n}: determinant {g.det!r}")
        if not same_geodesic(image_of_geodesic(g, plus), minus):
            bad.append(f"g{n}: does not carry gamma+ onto gamma-")
        kind = classify(g)
        if n == 0:
            if kind is not MapClass.PARABOLIC:
                bad.append(f"g0: expected parabolic, got {kind.value}")
            continue
        if kind is not MapClass.HYPERBOLIC:
            bad.append(f"g{n}: expected hyperbolic, got {kind.value}")
            continue
        want = 2 * (s[n] + s[n - 1]) / (s[n] - s[n - 1])
        if not close(g.trace, want):
            bad.append(f"g{n}: trace {g.trace!r} != {want!r}")
        if not close(fl.length_param(n, s), translation_length(g)):
            bad.append(f"g{n}: length parameter disagrees with translation length")
        if abs(fl.basmajian_term(n, s) - fl.basmajian_closed_form(n, s)) > 1e-12:
            bad.append(f"g{n}: Basmajian term disagrees with closed form")
    circles = [c for pair in group.sides for c in pair]
    if not mutually_exterior(circles):
        bad.append("sides are not mutually exterior")
    mirrored = sorted((-c.center, c.radius) for c in circles)
    if not all(close(u[0], v[0]) and close(u[1], v[1])
               for u, v in zip(mirrored, sorted((c.center, c.radius) for c in circles))):
        bad.append("side family is not mirror symmetric")
    bad += side_pairing_violations(flute_presentation(group), n_points, depth)
    return bad


def monster_violations(group: mo.MonsterGroup, depth: int = 2, n_points: int = 200) -> list[str]:
    bad = []
    for n, (f, g), (sig, sig_t, rho, rho_t) in zip(group.spec.indices, group.pairs, group.circles):
        for name, m, src, dst in (("f", f, sig, sig_t), ("g", g, rho, rho_t)):
            if classify(m) is not MapClass.HYPERBOLIC:
                bad.append(f"{name}{n}: not hyperbolic")
                continue
            if not same_geodesic(image_of_geodesic(m, src), dst):
                bad.append(f"{name}{n}: wrong side pairing")
            for z in fixed_points(m):
                if not close(apply(m, z), z):
                    bad.append(f"{name}{n}: fixed point {z} is not fixed")
    if not mutually_exterior([c for quad in group.circles for c in quad]):
        bad.append("circles are not mutually exterior")
    bad += side_pairing_violations(monster_presentation(group), n_points, depth)
    return bad


def orbit_violations(pres, depth: int = 2) -> list[str]:
    bad = []
    for tile in enumerate_orbit(pres, depth):
        if not tile.map.isclose(word_map(pres, tile.word)):
            bad.append(f"tile {tile.name}: map does not recompose")
    return bad
