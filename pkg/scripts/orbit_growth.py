"""Tile count and limit-set sample size against word length."""

import argparse

from fuchsia.flute import SequenceSpec, build_flute
from fuchsia.monster import MonsterSpec, build_monster
from fuchsia.tess import enumerate_orbit, flute_presentation, limit_set_sample, monster_presentation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-depth", type=int, default=5)
    args = ap.parse_args()
    groups = {
        "flute(1,1)": flute_presentation(build_flute(SequenceSpec((1.0, 1.0)), 2)),
        "flute(1,2,1)": flute_presentation(build_flute(SequenceSpec((1.0, 2.0, 1.0)), 3)),
        "monster(1 window)": monster_presentation(build_monster(MonsterSpec(((-3, -1, 0, 3, 5),)))),
    }
    print(f"{'group':<20}{'depth':>6}{'tiles':>10}{'limit pts':>11}")
    for name, pres in groups.items():
        for depth in range(1, args.max_depth + 1):
            tiles = enumerate_orbit(pres, depth)
            pts = limit_set_sample(pres, depth)
            print(f"{name:<20}{depth:>6}{len(tiles):>10}{len(pts):>11}")


if __name__ == "__main__":
    main()
