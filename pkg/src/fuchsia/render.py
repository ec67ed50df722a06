"""SVG rendering of geodesic configurations in the upper half-plane."""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass

from .errors import EmptyViewport
from .geodesics import Geodesic, HalfCircle, VerticalRay

DEFAULT_PALETTE = ("#1f4e9c", "#c0392b", "#27864a", "#8e44ad", "#d68910", "#566573")


@dataclass(frozen=True)
class Viewport:
    xmin: float
    xmax: float
    ymax: float
    ymin: float = 0.0

    @classmethod
    def parse(cls, text: str) -> Viewport:
        """From ``XMIN:XMAX:YMAX``."""
        xmin, xmax, ymax = (float(v) for v in text.split(":"))
        return cls(xmin, xmax, ymax)

    @classmethod
    def around(cls, arcs, margin: float = 0.1) -> Viewport:
        xs = [p for g in arcs for p in g.endpoints if math.isfinite(p)]
        if not xs:
            return cls(-1.0, 1.0, 1.0)
        lo, hi = min(xs), max(xs)
        pad = margin * max(hi - lo, 1.0)
        return cls(lo - pad, hi + pad, 0.6 * (hi - lo) + pad)


@dataclass(frozen=True)
class RenderStyle:
    width_px: int = 800
    stroke_width: float = 1.5
    palette: tuple[str, ...] = DEFAULT_PALETTE
    labels: bool = False
    min_radius_px: float = 0.05
    axis_color: str = "#888888"
    digits: int = 4


def _fmt(v: float, digits: int) -> str:
    s = f"{v:.{digits}f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Canvas:
    def __init__(self, vp: Viewport, style: RenderStyle):
        self.vp, self.style = vp, style
        self.scale = style.width_px / (vp.xmax - vp.xmin)
        self.height = (vp.ymax - vp.ymin) * self.scale

    def x(self, x):
        return _fmt((x - self.vp.xmin) * self.scale, self.style.digits)

    def y(self, y):
        return _fmt((self.vp.ymax - y) * self.scale, self.style.digits)

    def geodesic_path(self, g: Geodesic) -> str | None:
        vp = self.vp
        if isinstance(g, VerticalRay):
            if not vp.xmin <= g.foot <= vp.xmax:
                return None
            return f"M {self.x(g.foot)} {self.y(vp.ymin)} L {self.x(g.foot)} {self.y(vp.ymax)}"
        lo, hi = g.endpoints
        if hi < vp.xmin or lo > vp.xmax or g.radius * self.scale < self.style.min_radius_px:
            return None
        rpx = _fmt(g.radius * self.scale, self.style.digits)
        # left to right over the top is clockwise on screen: sweep flag 1
        return f"M {self.x(lo)} {self.y(0.0)} A {rpx} {rpx} 0 0 1 {self.x(hi)} {self.y(0.0)}"


def render_svg(g, tiles, viewport: Viewport, style: RenderStyle | None = None) -> bytes:
    """Draw each tile's arcs as exact circular arcs, clipped to ``viewport``.

    ``g`` is the presentation (its arc labels are used when ``style.labels``).
    The output depends only on the inputs.
    """
    style = style or RenderStyle()
    if not (viewport.xmax > viewport.xmin and viewport.ymax > viewport.ymin):
        raise EmptyViewport(f"degenerate viewport {viewport}")
    cv = _Canvas(viewport, style)
    w, h = _fmt(style.width_px, 3), _fmt(cv.height, 3)
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "version": "1.1",
            "width": w,
            "height": h,
            "viewBox": f"0 0 {w} {h}",
        },
    )
    defs = ET.SubElement(root, "defs")
    clip = ET.SubElement(defs, "clipPath", {"id": "viewport"})
    ET.SubElement(clip, "rect", {"x": "0", "y": "0", "width": w, "height": h})

    axes = ET.SubElement(root, "g", {"class": "axes", "stroke": style.axis_color, "stroke-width": "1"})
    ET.SubElement(axes, "line", {"x1": "0", "y1": cv.y(0.0), "x2": w, "y2": cv.y(0.0)})
    if viewport.xmin <= 0 <= viewport.xmax:
        ET.SubElement(
            axes, "line",
            {"x1": cv.x(0.0), "y1": cv.y(viewport.ymin), "x2": cv.x(0.0), "y2": cv.y(viewport.ymax),
             "stroke-dasharray": "4 4"},
        )

    body = ET.SubElement(
        root, "g",
        {"clip-path": "url(#viewport)", "fill": "none", "stroke-width": _fmt(style.stroke_width, 3)},
    )
    for tile in tiles:
        color = style.palette[len(tile.word) % len(style.palette)]
        grp = ET.SubElement(body, "g", {"class": "tile", "stroke": color})
        ET.SubElement(grp, "title").text = tile.name
        for arc in tile.arcs:
            d = cv.geodesic_path(arc)
            if d is not None:
                ET.SubElement(grp, "path", {"class": "geodesic", "d": d})

    if style.labels and g is not None and g.arc_labels:
        text = ET.SubElement(root, "g", {"class": "labels", "font-size": "12", "text-anchor": "middle"})
        for arc, label in zip(g.boundary_arcs, g.arc_labels):
            if isinstance(arc, HalfCircle):
                x, y = arc.center, arc.radius
            else:
                x, y = arc.foot, 0.5 * (viewport.ymin + viewport.ymax)
            if viewport.xmin <= x <= viewport.xmax and y <= viewport.ymax:
                t = ET.SubElement(text, "text", {"x": cv.x(x), "y": cv.y(y)})
                t.text = label

    ET.indent(root)
    return ET.tostring(root, encoding="utf-8", xml_declaration=True) + b"\n"


def count_arcs(svg: bytes) -> int:
    """Number of path elements drawing a circular arc."""
    root = ET.fromstring(svg)
    ns = "{http://www.w3.org/2000/svg}"
    return sum(1 for p in root.iter(f"{ns}path") if " A " in p.get("d", ""))
