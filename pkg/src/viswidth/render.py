"""Deterministic SVG output.

Coordinates are converted to floats only here, printed with 9 significant
digits; nothing rendered feeds back into computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional
from xml.sax.saxutils import escape

from .geometry import Chord, Point, SimplePolygon

LAYER_COLORS = ("#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2")


@dataclass
class RenderSpec:
    polygon: SimplePolygon
    viewpoint: Optional[Point] = None
    region: object = None  # VisibilityRegion or WeakVisibilityRegion
    chord: Optional[Chord] = None
    intervals: list = field(default_factory=list)  # ChordInterval
    graph: object = None  # RestrictionGraph
    annotations: list = field(default_factory=list)  # (Point, label)
    size: int = 600
    margin: int = 20


def _fmt(v: float) -> str:
    s = "%.9g" % v
    return "0" if s == "-0" else s


class _Frame:
    def __init__(self, poly: SimplePolygon, size: int, margin: int):
        x0, y0, x1, y1 = (float(v) for v in poly.bbox())
        span = max(x1 - x0, y1 - y0) or 1.0
        self.scale = (size - 2 * margin) / span
        self.x0, self.y1 = x0, y1
        self.margin = margin
        self.width = _fmt(2 * margin + (x1 - x0) * self.scale)
        self.height = _fmt(2 * margin + (y1 - y0) * self.scale)

    def xy(self, p: Point):
        x = self.margin + (float(p.x) - self.x0) * self.scale
        y = self.margin + (self.y1 - float(p.y)) * self.scale
        return _fmt(x), _fmt(y)

    def path(self, pts) -> str:
        parts = []
        for i, p in enumerate(pts):
            x, y = self.xy(p)
            parts.append(f"{'M' if i == 0 else 'L'}{x} {y}")
        return " ".join(parts) + " Z"


def _line(frame, a, b, **attrs) -> str:
    x1, y1 = frame.xy(a)
    x2, y2 = frame.xy(b)
    extra = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in attrs.items())
    return f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"{extra}/>'


def render_svg(spec: RenderSpec) -> str:
    f = _Frame(spec.polygon, spec.size, spec.margin)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{f.width}" '
        f'height="{f.height}" viewBox="0 0 {f.width} {f.height}">',
        f'<path id="polygon" d="{f.path(spec.polygon.vertices)}" fill="#f4f4f4" stroke="#222" stroke-width="1.5"/>',
    ]
    if spec.region is not None:
        reg = spec.region
        out.append(
            f'<path id="region" d="{f.path(reg.boundary.vertices)}" fill="#ffd54f" '
            'fill-opacity="0.45" stroke="none"/>'
        )
        for i, w in enumerate(reg.windows):
            out.append(_line(f, w.a, w.b, id=f"window-{i}", stroke="#e65100", stroke_width="1.5", stroke_dasharray="4 3"))
        for i, s in enumerate(getattr(reg, "spurs", ())):
            out.append(_line(f, s.a, s.b, id=f"spur-{i}", stroke="#e65100", stroke_width="1"))
    if spec.chord is not None:
        out.append(_line(f, spec.chord.a, spec.chord.b, id="chord", stroke="#000", stroke_width="3"))
    for i, iv in enumerate(spec.intervals):
        color = LAYER_COLORS[i % len(LAYER_COLORS)]
        out.append(_line(f, iv.start, iv.stop, id=f"interval-{i}", stroke=color, stroke_width="5", stroke_opacity="0.6"))
    if spec.graph is not None:
        g = spec.graph
        layer = g.layer_of()
        for j, (u, v) in enumerate(g.edges):
            out.append(
                _line(f, g.nodes[u].point, g.nodes[v].point, id=f"edge-{j}", stroke="#555", stroke_width="1", **{"class": "edge"})
            )
        for nd in g.nodes:
            x, y = f.xy(nd.point)
            color = LAYER_COLORS[layer.get(nd.id, 0) % len(LAYER_COLORS)]
            out.append(f'<circle id="node-{nd.id}" class="node" cx="{x}" cy="{y}" r="4" fill="{color}"/>')
    if spec.viewpoint is not None:
        x, y = f.xy(spec.viewpoint)
        out.append(f'<circle id="viewpoint" cx="{x}" cy="{y}" r="4" fill="#000"/>')
    for i, (p, label) in enumerate(spec.annotations):
        x, y = f.xy(p)
        out.append(f'<circle id="mark-{i}" cx="{x}" cy="{y}" r="3" fill="#6a1b9a"/>')
        out.append(f'<text x="{x}" y="{y}" dx="5" dy="-5" font-size="12">{escape(str(label))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
