"""Exact planar primitives: rational points, predicates, simple polygons, chords.

Every predicate is evaluated on homogeneous integer coordinates, so no
decision in this package ever depends on rounding.  A point ``(x, y)`` with
rational coordinates is stored alongside ``(X, Y, W)`` where ``x = X / W``,
``y = Y / W`` and ``W > 0``; orientation is then the sign of an integer 3x3
determinant.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    EndpointNotOnBoundary,
    NotSimpleError,
    SegmentLeavesPolygon,
)

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a :class:`~fractions.Fraction` without rounding.

    Accepts ints, Fractions, floats (converted exactly) and strings of the
    form ``"17"`` or ``"-3/4"``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, float)):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise ValueError(f"not an integer or p/q rational: {value!r}")
        frac = Fraction(value.replace(" ", ""))
        return frac
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    return str(value)


class Point:
    """Immutable point with exact rational coordinates.

    Points compare lexicographically by ``(x, y)``; that order is the
    tie-breaker used throughout the package.
    """

    __slots__ = ("x", "y", "h")

    def __init__(self, x, y):
        x = as_rational(x)
        y = as_rational(y)
        self.x = x
        self.y = y
        xd, yd = x.denominator, y.denominator
        if xd == yd:
            self.h = (x.numerator, y.numerator, xd)
        else:
            w = xd * yd // math.gcd(xd, yd)
            self.h = (x.numerator * (w // xd), y.numerator * (w // yd), w)

    def __iter__(self):
        yield self.x
        yield self.y

    def __eq__(self, other):
        if not isinstance(other, Point):
            return NotImplemented
        return self.h == other.h

    def __hash__(self):
        return hash(self.h)

    def __lt__(self, other):
        return (self.x, self.y) < (other.x, other.y)

    def __le__(self, other):
        return (self.x, self.y) <= (other.x, other.y)

    def __gt__(self, other):
        return (self.x, self.y) > (other.x, other.y)

    def __ge__(self, other):
        return (self.x, self.y) >= (other.x, other.y)

    def __repr__(self):
        return f"Point({self.x}, {self.y})"

    def to_json(self) -> list:
        return [format_rational(self.x), format_rational(self.y)]

    def midpoint(self, other: "Point") -> "Point":
        return Point((self.x + other.x) / 2, (self.y + other.y) / 2)


def as_point(value) -> Point:
    if isinstance(value, Point):
        return value
    x, y = value
    return Point(x, y)


# --- raw integer kernels -------------------------------------------------
# These operate on the ``Point.h`` triples and are the hot path of the
# whole package.


def orient_h(h1, h2, h3) -> int:
    """Sign of (p2 - p1) x (p3 - p1) for homogeneous triples."""
    X1, Y1, W1 = h1
    X2, Y2, W2 = h2
    X3, Y3, W3 = h3
    det = X1 * (Y2 * W3 - Y3 * W2) - Y1 * (X2 * W3 - X3 * W2) + W1 * (X2 * Y3 - X3 * Y2)
    return (det > 0) - (det < 0)


def direction_h(h1, h2):
    """Integer vector with the direction of p2 - p1 (positively scaled)."""
    X1, Y1, W1 = h1
    X2, Y2, W2 = h2
    return (X2 * W1 - X1 * W2, Y2 * W1 - Y1 * W2)


def cross(d1, d2) -> int:
    return d1[0] * d2[1] - d1[1] * d2[0]


def dot(d1, d2) -> int:
    return d1[0] * d2[0] + d1[1] * d2[1]


def sign(v) -> int:
    return (v > 0) - (v < 0)


def between_h(h1, h2, h3) -> bool:
    """For collinear points: is p3 on the closed segment p1p2?"""
    d1 = direction_h(h1, h3)
    d2 = direction_h(h3, h2)
    return d1[0] * d2[0] + d1[1] * d2[1] >= 0


# --- public predicates ---------------------------------------------------


class Orientation(enum.IntEnum):
    RIGHT = -1
    COLLINEAR = 0
    LEFT = 1


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Turn direction of ``p -> q -> r``; LEFT means counterclockwise."""
    return Orientation(orient_h(p.h, q.h, r.h))


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point
    degenerate: bool = False

    def __post_init__(self):
        if self.a == self.b and not self.degenerate:
            raise ValueError("segment endpoints coincide; pass degenerate=True to allow")

    def __iter__(self):
        yield self.a
        yield self.b

    def contains(self, p: Point) -> bool:
        return orient_h(self.a.h, self.b.h, p.h) == 0 and between_h(self.a.h, self.b.h, p.h)

    def point_at(self, t) -> Point:
        t = as_rational(t)
        return Point(self.a.x + t * (self.b.x - self.a.x), self.a.y + t * (self.b.y - self.a.y))

    def midpoint(self) -> Point:
        return self.a.midpoint(self.b)

    def to_json(self) -> list:
        return [self.a.to_json(), self.b.to_json()]


class IntersectionKind(enum.Enum):
    EMPTY = "empty"
    POINT = "point"
    SEGMENT = "segment"


@dataclass(frozen=True)
class Intersection:
    kind: IntersectionKind
    point: Optional[Point] = None
    segment: Optional[Segment] = None

    def __bool__(self):
        return self.kind is not IntersectionKind.EMPTY


def line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point:
    """Intersection of the (non-parallel) lines p1p2 and q1q2."""
    dpx, dpy = p2.x - p1.x, p2.y - p1.y
    dqx, dqy = q2.x - q1.x, q2.y - q1.y
    denom = dpx * dqy - dpy * dqx
    if denom == 0:
        raise ValueError("lines are parallel")
    t = ((q1.x - p1.x) * dqy - (q1.y - p1.y) * dqx) / denom
    return Point(p1.x + t * dpx, p1.y + t * dpy)


def segments_intersect(s1: Segment, s2: Segment) -> Intersection:
    """Exact intersection of two closed segments, including collinear overlap."""
    a, b = s1.a, s1.b
    c, d = s2.a, s2.b
    o1 = orient_h(a.h, b.h, c.h)
    o2 = orient_h(a.h, b.h, d.h)
    o3 = orient_h(c.h, d.h, a.h)
    o4 = orient_h(c.h, d.h, b.h)
    if o1 == o2 == o3 == o4 == 0:
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if hi < lo:
            return Intersection(IntersectionKind.EMPTY)
        if hi == lo:
            return Intersection(IntersectionKind.POINT, point=lo)
        return Intersection(IntersectionKind.SEGMENT, segment=Segment(lo, hi))
    if o1 * o2 > 0 or o3 * o4 > 0:
        return Intersection(IntersectionKind.EMPTY)
    if o1 == 0 and between_h(a.h, b.h, c.h):
        return Intersection(IntersectionKind.POINT, point=c)
    if o2 == 0 and between_h(a.h, b.h, d.h):
        return Intersection(IntersectionKind.POINT, point=d)
    if o3 == 0 and between_h(c.h, d.h, a.h):
        return Intersection(IntersectionKind.POINT, point=a)
    if o4 == 0 and between_h(c.h, d.h, b.h):
        return Intersection(IntersectionKind.POINT, point=b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return Intersection(IntersectionKind.POINT, point=line_intersection(a, b, c, d))
    return Intersection(IntersectionKind.EMPTY)


def _closed_segments_meet(h1, h2, h3, h4) -> bool:
    o1 = orient_h(h1, h2, h3)
    o2 = orient_h(h1, h2, h4)
    if o1 * o2 > 0:
        return False
    o3 = orient_h(h3, h4, h1)
    o4 = orient_h(h3, h4, h2)
    if o3 * o4 > 0:
        return False
    if o1 or o2 or o3 or o4:
        if o1 * o2 < 0 and o3 * o4 < 0:
            return True
        return (
            (o1 == 0 and between_h(h1, h2, h3))
            or (o2 == 0 and between_h(h1, h2, h4))
            or (o3 == 0 and between_h(h3, h4, h1))
            or (o4 == 0 and between_h(h3, h4, h2))
        )
    # collinear: overlap iff some endpoint lies on the other segment
    return (
        between_h(h1, h2, h3)
        or between_h(h1, h2, h4)
        or between_h(h3, h4, h1)
        or between_h(h3, h4, h2)
    )


def signed_area2(vertices: Sequence[Point]) -> Fraction:
    """Twice the signed area (positive for counterclockwise rings)."""
    total = Fraction(0)
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def simplicity_violation(vertices: Sequence[Point], require_ccw: bool = True) -> Optional[str]:
    """Return a human-readable reason the ring is not a simple polygon, or None."""
    vertices = [as_point(v) for v in vertices]
    n = len(vertices)
    if n < 3:
        raise ValueError("a polygon needs at least 3 vertices")
    if len(set(vertices)) != n:
        return "repeated vertex"
    hs = [v.h for v in vertices]
    for i in range(n):
        a, b = hs[i], hs[(i + 1) % n]
        # consecutive edges may only share their common endpoint
        c = hs[(i + 2) % n]
        if orient_h(a, b, c) == 0 and (between_h(a, b, c) or between_h(b, c, a)):
            return f"edges {i} and {(i + 1) % n} overlap"
        last = n - 1 if i > 0 else n - 2
        for j in range(i + 2, last + 1):
            if _closed_segments_meet(a, b, hs[j], hs[(j + 1) % n]):
                return f"edges {i} and {j} intersect"
    area = signed_area2(vertices)
    if area == 0:
        return "zero area"
    if require_ccw and area < 0:
        return "vertices are in clockwise order"
    return None


def is_simple(vertices: Iterable, require_ccw: bool = True) -> bool:
    """True iff ``vertices`` form a simple polygon (counterclockwise unless
    ``require_ccw`` is False)."""
    pts = [as_point(v) for v in vertices]
    return simplicity_violation(pts, require_ccw) is None


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    EXTERIOR = "exterior"


class SimplePolygon:
    """Counterclockwise simple polygon with exact vertices.

    Instances are immutable.  A small cache of per-vertex visibility maps is
    attached lazily by :mod:`viswidth.visibility`.
    """

    def __init__(self, vertices: Iterable, *, validate: bool = True):
        pts = tuple(as_point(v) for v in vertices)
        if validate:
            reason = simplicity_violation(pts)
            if reason is not None:
                raise NotSimpleError(f"not a simple counterclockwise polygon: {reason}")
        self.vertices = pts
        self.n = len(pts)
        self.hs = [p.h for p in pts]
        self.index = {p: i for i, p in enumerate(pts)}
        n = self.n
        self.edge_dirs = [direction_h(self.hs[i], self.hs[(i + 1) % n]) for i in range(n)]
        self.turns = [
            orient_h(self.hs[i - 1], self.hs[i], self.hs[(i + 1) % n]) for i in range(n)
        ]
        self.reflex_indices = tuple(i for i in range(n) if self.turns[i] < 0)
        self._vis_cache: dict = {}

    def __len__(self):
        return self.n

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other):
        return isinstance(other, SimplePolygon) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"SimplePolygon({len(self.vertices)} vertices)"

    @property
    def edges(self) -> list:
        n = self.n
        return [Segment(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]

    def edge(self, i: int) -> Segment:
        return Segment(self.vertices[i], self.vertices[(i + 1) % self.n])

    @property
    def reflex_vertices(self) -> list:
        return [self.vertices[i] for i in self.reflex_indices]

    def is_reflex(self, p: Point) -> bool:
        i = self.index.get(p)
        return i is not None and self.turns[i] < 0

    def bbox(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return min(xs), min(ys), max(xs), max(ys)

    def locate(self, p: Point):
        """Classify ``p``; returns ``(Location, vertex_index, edge_index)``.

        For a boundary point exactly one of the indices is set: the vertex it
        coincides with, or the edge whose relative interior contains it.
        """
        X, Y, W = ph = p.h
        hs = self.hs
        n = self.n
        inside = False
        for i in range(n):
            h1 = hs[i]
            if h1 == ph:
                return Location.BOUNDARY, i, None
            h2 = hs[i + 1] if i + 1 < n else hs[0]
            X1, Y1, W1 = h1
            X2, Y2, W2 = h2
            det = X1 * (Y2 * W - Y * W2) - Y1 * (X2 * W - X * W2) + W1 * (X2 * Y - X * Y2)
            above1 = Y1 * W > Y * W1
            above2 = Y2 * W > Y * W2
            if det == 0:
                if (X1 * W - X * W1) * (X2 * W - X * W2) <= 0 and (Y1 * W - Y * W1) * (
                    Y2 * W - Y * W2
                ) <= 0:
                    if h2 == ph:
                        return Location.BOUNDARY, (i + 1) % n, None
                    return Location.BOUNDARY, None, i
                continue
            if above1 != above2 and (det > 0) == above2:
                inside = not inside
        return (Location.INTERIOR if inside else Location.EXTERIOR), None, None

    def to_json(self) -> dict:
        return {"vertices": [p.to_json() for p in self.vertices]}


def contains_point(poly: SimplePolygon, p) -> Location:
    """Exact point location by ray casting."""
    return poly.locate(as_point(p))[0]


def reflex_vertices(poly: SimplePolygon) -> list:
    """Vertices with interior angle strictly greater than pi, in ring order."""
    return poly.reflex_vertices


@dataclass(frozen=True, eq=False)
class Chord:
    """A segment between two boundary points that stays in the closed polygon.

    Build instances with :func:`make_chord`, which checks both conditions.
    Parameter ``t`` runs from ``a`` (t=0) to ``b`` (t=1).
    """

    polygon: SimplePolygon
    a: Point
    b: Point

    @property
    def segment(self) -> Segment:
        return Segment(self.a, self.b)

    def point_at(self, t) -> Point:
        return self.segment.point_at(t)

    def param_of(self, p: Point) -> Fraction:
        dx, dy = self.b.x - self.a.x, self.b.y - self.a.y
        return ((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / (dx * dx + dy * dy)

    def same_segment(self, other: "Chord") -> bool:
        return {self.a, self.b} == {other.a, other.b}

    def canonical(self) -> "Chord":
        if self.b < self.a:
            return Chord(self.polygon, self.b, self.a)
        return self

    def sort_key(self):
        lo, hi = sorted((self.a, self.b))
        return (lo.x, lo.y, hi.x, hi.y)

    def __eq__(self, other):
        if not isinstance(other, Chord):
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.polygon is other.polygon

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Chord({self.a!r}, {self.b!r})"

    def to_json(self) -> list:
        return [self.a.to_json(), self.b.to_json()]


def segment_inside(poly: SimplePolygon, p: Point, q: Point) -> bool:
    """Is the closed segment pq contained in the closed polygon?

    Brute force: reject any proper crossing with an edge, then check that
    every piece between boundary contacts lies inside.  Both endpoints must
    already be known to lie in the closed polygon.
    """
    if p == q:
        return True
    ph, qh = p.h, q.h
    hs = poly.hs
    n = poly.n
    d = direction_h(ph, qh)
    sides = [orient_h(ph, qh, h) for h in hs]
    contacts = []
    for i in range(n):
        s1 = sides[i]
        j = i + 1 if i + 1 < n else 0
        s2 = sides[j]
        if s1 * s2 < 0:
            o3 = orient_h(hs[i], hs[j], ph)
            o4 = orient_h(hs[i], hs[j], qh)
            if o3 * o4 < 0:
                return False
        if s1 == 0:
            v = hs[i]
            dv = direction_h(ph, v)
            k = dot(dv, d)
            if 0 < k and dot(direction_h(v, qh), d) > 0:
                contacts.append(poly.vertices[i])
    if not contacts:
        return poly.locate(p.midpoint(q))[0] is not Location.EXTERIOR
    contacts.sort(key=lambda v: dot(direction_h(ph, v.h), d) * Fraction(1, v.h[2]))
    chain = [p, *contacts, q]
    for u, v in zip(chain, chain[1:]):
        if poly.locate(u.midpoint(v))[0] is Location.EXTERIOR:
            return False
    return True


def make_chord(poly: SimplePolygon, a, b) -> Chord:
    """Validate ``seg(a, b)`` as a chord of ``poly``."""
    a, b = as_point(a), as_point(b)
    if a == b:
        raise SegmentLeavesPolygon("chord endpoints coincide")
    for end in (a, b):
        if poly.locate(end)[0] is not Location.BOUNDARY:
            raise EndpointNotOnBoundary(f"{end!r} is not on the polygon boundary")
    if not segment_inside(poly, a, b):
        raise SegmentLeavesPolygon(f"segment {a!r}-{b!r} leaves the polygon")
    return Chord(poly, a, b)
