"""JSON input parsing and deterministic report serialization."""

from __future__ import annotations

import json
import math

from . import flute as fl
from . import monster as mo
from .geodesics import HalfCircle, VerticalRay
from .moebius import MoebiusMap


class SchemaError(ValueError):
    """Input does not match the expected JSON layout."""


def _number(v, what):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SchemaError(f"{what} must be a number, got {v!r}")
    return float(v)


def parse_tail(obj):
    if obj is None:
        return None
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError("tail must be an object with a 'kind'")
    kind = obj["kind"]
    try:
        if kind == "none":
            return None
        if kind == "constant":
            return fl.ConstantTail(_number(obj["c"], "tail.c"))
        if kind == "geometric":
            return fl.GeometricTail(
                _number(obj["first"], "tail.first"),
                _number(obj["ratio"], "tail.ratio"),
            )
        if kind == "harmonic":
            return fl.HarmonicTail(_number(obj.get("scale", 1.0), "tail.scale"))
        if kind == "custom":
            div = obj.get("divergent")
            if div not in (True, False, None, "unknown"):
                raise SchemaError("tail.divergent must be true, false or 'unknown'")
            limit = obj.get("limit")
            return fl.CustomTail(
                None if div == "unknown" else div,
                None if limit is None else _number(limit, "tail.limit"),
            )
    except KeyError as exc:
        raise SchemaError(f"tail of kind {kind!r} is missing {exc.args[0]!r}") from None
    raise SchemaError(f"unknown tail kind {kind!r}")


def parse_flute(obj) -> tuple[fl.SequenceSpec, int | None]:
    """Returns the spec and the requested generator count (if any).

    Positivity is checked by ``SequenceSpec`` and surfaces as ``ValueError``.
    """
    if not isinstance(obj, dict) or not isinstance(obj.get("prefix"), list):
        raise SchemaError("flute input needs a 'prefix' list")
    prefix = [_number(v, "prefix entry") for v in obj["prefix"]]
    n = obj.get("n_generators")
    if n is not None and (isinstance(n, bool) or not isinstance(n, int)):
        raise SchemaError("n_generators must be an integer")
    return fl.SequenceSpec(tuple(prefix), parse_tail(obj.get("tail"))), n


def parse_monster(obj) -> mo.MonsterSpec:
    if not isinstance(obj, dict) or not isinstance(obj.get("windows"), list):
        raise SchemaError("monster input needs a 'windows' list")
    windows = []
    for w in obj["windows"]:
        if not isinstance(w, list) or len(w) != 5:
            raise SchemaError(f"each window is five numbers, got {w!r}")
        windows.append(mo.MonsterWindow(*(_number(v, "window entry") for v in w)))
    flags = obj.get("flags", {})
    if not isinstance(flags, dict):
        raise SchemaError("flags must be an object")
    for k, v in flags.items():
        if k not in ("gapless", "left_unbounded", "right_unbounded"):
            raise SchemaError(f"unknown flag {k!r}")
        if v is not None and not isinstance(v, bool):
            raise SchemaError(f"flag {k} must be boolean")
    first = obj.get("first_index", 0)
    if isinstance(first, bool) or not isinstance(first, int):
        raise SchemaError("first_index must be an integer")
    return mo.MonsterSpec(
        tuple(windows),
        first_index=first,
        gapless=flags.get("gapless"),
        left_unbounded=flags.get("left_unbounded"),
        right_unbounded=flags.get("right_unbounded"),
    )


def is_monster_input(obj) -> bool:
    return isinstance(obj, dict) and "windows" in obj


# -- reports -----------------------------------------------------------------


def num(v: float):
    """12 significant digits; infinities become strings."""
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    out = float(f"{v:.12g}")
    return 0.0 if out == 0 else out


def matrix(m: MoebiusMap) -> list:
    return [[num(m.a), num(m.b)], [num(m.c), num(m.d)]]


def geodesic(g) -> dict:
    if isinstance(g, VerticalRay):
        return {"kind": "vertical", "foot": num(g.foot)}
    assert isinstance(g, HalfCircle)
    return {"kind": "half_circle", "center": num(g.center), "radius": num(g.radius)}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, allow_nan=False) + "\n"


def loads(text: str) -> dict:
    return json.loads(text)
