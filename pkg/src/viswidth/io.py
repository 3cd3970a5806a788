"""JSON formats for polygons, regions, widths and graphs."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import PolygonFormatError
from .geometry import Point, SimplePolygon, as_point


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def polygon_from_obj(obj) -> SimplePolygon:
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise PolygonFormatError('expected an object with a "vertices" array')
    verts = obj["vertices"]
    if not isinstance(verts, list):
        raise PolygonFormatError('"vertices" must be an array')
    pts = []
    for i, v in enumerate(verts):
        if not isinstance(v, (list, tuple)) or len(v) != 2:
            raise PolygonFormatError(f"vertex {i} is not a coordinate pair")
        if any(isinstance(c, (bool, float)) for c in v):
            raise PolygonFormatError(f"vertex {i}: coordinates must be integers or 'p/q' strings")
        try:
            pts.append(as_point(v))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise PolygonFormatError(f"vertex {i}: {exc}") from None
    if len(pts) < 3:
        raise PolygonFormatError("a polygon needs at least 3 vertices")
    return SimplePolygon(pts)


def loads_polygon(text: str) -> SimplePolygon:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolygonFormatError(f"malformed JSON: {exc}") from None
    return polygon_from_obj(obj)


def load_polygon(path) -> SimplePolygon:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise PolygonFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads_polygon(text)


def dumps_polygon(poly: SimplePolygon) -> str:
    return dumps(poly.to_json())


def save_polygon(poly: SimplePolygon, path) -> None:
    Path(path).write_text(dumps_polygon(poly))


def parse_point(text: str) -> Point:
    """``"X,Y"`` with integer or ``p/q`` coordinates."""
    parts = text.split(",")
    if len(parts) != 2:
        raise PolygonFormatError(f"expected X,Y but got {text!r}")
    try:
        return as_point(parts)
    except (TypeError, ValueError, ZeroDivisionError):
        raise PolygonFormatError(f"bad point {text!r}") from None


def parse_chord_arg(text: str):
    """``"AX,AY:BX,BY"`` -> two points."""
    parts = text.split(":")
    if len(parts) != 2:
        raise PolygonFormatError(f"expected AX,AY:BX,BY but got {text!r}")
    return parse_point(parts[0]), parse_point(parts[1])
