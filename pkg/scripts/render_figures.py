"""Render a flute and a monster tessellation to SVG.

    python3 scripts/render_figures.py --out figures --depth 3
"""

import argparse
from pathlib import Path

from fuchsia.flute import SequenceSpec, build_flute
from fuchsia.monster import MonsterSpec, build_monster
from fuchsia.render import RenderStyle, Viewport, render_svg
from fuchsia.tess import enumerate_orbit, flute_presentation, monster_presentation


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="figures")
    ap.add_argument("--depth", type=int, default=3)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    jobs = {
        "flute_1_2_identity.svg": (flute_presentation(build_flute(SequenceSpec((1.0, 2.0)), 2)), 0,
                                   Viewport(-4, 4, 4)),
        "flute_1_1.svg": (flute_presentation(build_flute(SequenceSpec((1.0, 1.0)), 2)), args.depth,
                          Viewport(-3, 3, 3)),
        "monster.svg": (monster_presentation(build_monster(MonsterSpec((
            (-3, -1, 0, 3, 5), (5, 6, 8, 9, 12))))), args.depth, Viewport(-5, 14, 7)),
    }
    for name, (pres, depth, vp) in jobs.items():
        tiles = enumerate_orbit(pres, depth)
        svg = render_svg(pres, tiles, vp, RenderStyle(labels=True))
        (out / name).write_bytes(svg)
        print(f"{name}: {len(tiles)} tiles, {len(svg)} bytes")


if __name__ == "__main__":
    main()
