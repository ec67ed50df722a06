"""Command-line front end.

Exit status: 0 on success, 1 when the input or the constructed group fails
validation, 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import checks
from . import flute as fl
from . import io
from . import monster as mo
from .errors import BudgetExceeded, FuchsiaError, InsufficientData, InvalidWindow
from .moebius import classify, translation_length
from .render import DEFAULT_PALETTE, RenderStyle, Viewport, render_svg
from .tess import (
    DEFAULT_TILE_CAP,
    enumerate_orbit,
    flute_presentation,
    limit_set_sample,
    monster_presentation,
)

log = logging.getLogger("fuchsia")

DEFAULT_N_GENERATORS = 8


class ValidationFailure(Exception):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


def _load(args):
    try:
        with open(args.input) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise io.SchemaError(f"cannot read {args.input}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise io.SchemaError(f"{args.input} is not valid JSON: {exc}") from None
    if io.is_monster_input(obj):
        return "monster", io.parse_monster(obj)
    try:
        spec, n = io.parse_flute(obj)
    except io.SchemaError:
        raise
    except ValueError as exc:
        raise ValidationFailure([str(exc)]) from None
    default = DEFAULT_N_GENERATORS if spec.tail is not None else len(spec.prefix)
    return "flute", (spec, args.n_generators or n or default)


def _flute(args):
    kind, payload = _load(args)
    if kind != "flute":
        raise io.SchemaError("expected a flute input (with 'prefix')")
    spec, n = payload
    try:
        return fl.build_flute(spec, n)
    except InsufficientData as exc:
        raise ValidationFailure([str(exc)]) from None


def _monster(args):
    kind, spec = _load(args)
    if kind != "monster":
        raise io.SchemaError("expected a monster input (with 'windows')")
    try:
        return mo.build_monster(spec)
    except InvalidWindow as exc:
        raise ValidationFailure(exc.violations) from None


def _group(args):
    kind, _ = _load(args)
    if kind == "monster":
        g = _monster(args)
        return g, monster_presentation(g)
    g = _flute(args)
    return g, flute_presentation(g)


def _verdict_report(spec) -> dict:
    res = fl.classify_type(spec)
    out = {"verdict": res.verdict.value, "limit": None if res.limit is None else io.num(res.limit)}
    if res.verdict is fl.TypeVerdict.UNKNOWN:
        out["diagnostic"] = {k: io.num(v) for k, v in fl.growth_diagnostic(spec).items()}
    elif res.verdict is fl.TypeVerdict.SECOND_KIND_NON_PARABOLIC and res.limit is None:
        out["convex_core_boundary"] = "unknown"
    else:
        core = fl.convex_core_boundary(spec)
        out["convex_core_boundary"] = None if core is None else io.geodesic(core)
    return out


def cmd_build_flute(args):
    g = _flute(args)
    gens = []
    for n, m in enumerate(g.generators):
        plus, minus = g.sides[n]
        gens.append({
            "label": f"g{n}",
            "matrix": io.matrix(m),
            "trace": io.num(m.trace),
            "class": classify(m).value,
            "sides": [io.geodesic(plus), io.geodesic(minus)],
        })
    return {
        "kind": "flute",
        "x": [io.num(v) for v in g.x],
        "s": [io.num(v) for v in g.s],
        "generators": gens,
        "integral": fl.is_integral(g),
        "type": _verdict_report(g.spec),
    }


def cmd_build_monster(args):
    g = _monster(args)
    windows = []
    for n, (f, gg), quad in zip(g.spec.indices, g.pairs, g.circles):
        windows.append({
            "index": n,
            "f": {"matrix": io.matrix(f), "trace": io.num(f.trace), "class": classify(f).value},
            "g": {"matrix": io.matrix(gg), "trace": io.num(gg.trace), "class": classify(gg).value},
            "circles": [io.geodesic(c) for c in quad],
        })
    return {"kind": "monster", "windows": windows, "first_kind": mo.first_kind_check(g.spec).value}


def cmd_classify(args):
    kind, payload = _load(args)
    if kind == "monster":
        bad = mo.window_violations(payload)
        if bad:
            raise ValidationFailure(bad)
        return {"kind": "monster", "first_kind": mo.first_kind_check(payload).value}
    spec, _ = payload
    return {"kind": "flute", **_verdict_report(spec)}


def cmd_fn_params(args):
    g = _flute(args)
    rows = []
    for n in range(1, len(g.s)):
        rows.append({
            "n": n,
            "s_prev": io.num(g.s[n - 1]),
            "s": io.num(g.s[n]),
            "length": io.num(fl.length_param(n, g.s)),
            "translation_length": io.num(translation_length(g.generators[n])),
            "basmajian_term": io.num(fl.basmajian_term(n, g.s)),
        })
    return {"kind": "flute", "lengths": rows, "twists": "zero"}


def cmd_tessellate(args):
    _, pres = _group(args)
    collisions = []
    tiles = enumerate_orbit(pres, args.depth, args.tile_cap, collisions)
    if args.format == "svg":
        return _svg(args, pres, tiles)
    limit = limit_set_sample(pres, max(args.depth, 1), args.tile_cap)
    return {
        "depth": args.depth,
        "tiles": [{"word": t.name, "matrix": io.matrix(t.map)} for t in tiles],
        "limit_set_sample": [io.num(p) for p in limit],
        "collisions": [" ".join(f"{a}{'' if s > 0 else '^-1'}" for a, s in w) for w in collisions],
    }


def _svg(args, pres, tiles) -> bytes:
    vp = Viewport.parse(args.viewport) if args.viewport else Viewport.around(pres.boundary_arcs)
    style = RenderStyle(
        stroke_width=args.stroke_width,
        palette=tuple(args.palette.split(",")) if args.palette else DEFAULT_PALETTE,
        labels=args.labels,
    )
    return render_svg(pres, tiles, vp, style)


def cmd_render(args):
    _, pres = _group(args)
    return _svg(args, pres, enumerate_orbit(pres, args.depth, args.tile_cap))


def cmd_check(args):
    group, pres = _group(args)
    if isinstance(group, mo.MonsterGroup):
        bad = checks.monster_violations(group, depth=min(args.depth, 2) or 1)
    else:
        bad = checks.flute_violations(group, depth=min(args.depth, 2) or 1)
    bad += checks.orbit_violations(pres, depth=min(args.depth, 2))
    if bad:
        raise ValidationFailure(bad)
    return {"status": "ok", "violations": []}


COMMANDS = {
    "build-flute": cmd_build_flute,
    "build-monster": cmd_build_monster,
    "classify": cmd_classify,
    "fn-params": cmd_fn_params,
    "tessellate": cmd_tessellate,
    "render": cmd_render,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuchsia", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="JSON spec file")
        p.add_argument("--output", help="output path (default stdout)")
        p.add_argument("--n-generators", type=int, default=None)
        p.add_argument("--depth", type=int, default=2 if name != "render" else 0)
        p.add_argument("--viewport", help="XMIN:XMAX:YMAX (write --viewport=-4:4:4 for negative XMIN)")
        p.add_argument("--tile-cap", type=int, default=DEFAULT_TILE_CAP)
        p.add_argument("--format", choices=("json", "svg"), default="svg" if name == "render" else "json")
        p.add_argument("--stroke-width", type=float, default=1.5)
        p.add_argument("--palette", help="comma-separated colors, cycled by word length")
        p.add_argument("--labels", action="store_true", help="label the fundamental domain's sides")
    return parser


def _write(out, path):
    data = out if isinstance(out, bytes) else io.dumps(out).encode()
    if path:
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    if args.n_generators is not None and args.n_generators < 1:
        print("error: --n-generators must be positive", file=sys.stderr)
        return 2
    try:
        out = COMMANDS[args.command](args)
        if args.format == "svg" and not isinstance(out, bytes):
            print(f"error: {args.command} does not produce SVG", file=sys.stderr)
            return 2
        _write(out, args.output)
    except ValidationFailure as exc:
        for v in exc.violations:
            print(f"violation: {v}", file=sys.stderr)
        return 1
    except io.SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BudgetExceeded, FuchsiaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
