"""Seeded random simple polygons and the standard test corpus."""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import Point, SimplePolygon, is_simple, orient_h, signed_area2


def _segments_cross(p, q, r, s) -> bool:
    # proper crossing or touching of two segments given as Points
    o1 = orient_h(p.h, q.h, r.h)
    o2 = orient_h(p.h, q.h, s.h)
    o3 = orient_h(r.h, s.h, p.h)
    o4 = orient_h(r.h, s.h, q.h)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return False


def two_opt(points: list, rng: random.Random, max_rounds: int = 10000) -> list:
    """Untangle a closed tour by reversing the path between crossing edges."""
    pts = list(points)
    rng.shuffle(pts)
    n = len(pts)
    for _ in range(max_rounds):
        found = False
        for i in range(n):
            for j in range(i + 2, n):
                if i == 0 and j == n - 1:
                    continue
                a, b = pts[i], pts[i + 1]
                c, d = pts[j], pts[(j + 1) % n]
                if _segments_cross(a, b, c, d):
                    pts[i + 1 : j + 1] = reversed(pts[i + 1 : j + 1])
                    found = True
        if not found:
            return pts
    return pts


def random_simple_polygon(seed: int, n: int | None = None, size: int = 1000) -> SimplePolygon:
    """A simple counterclockwise polygon with ``n`` integer vertices.

    ``n`` defaults to ``6 + seed % 15`` so corpus sizes range over 6..20.
    """
    if n is None:
        n = 6 + seed % 15
    rng = random.Random(seed)
    while True:
        seen = set()
        pts = []
        while len(pts) < n:
            q = (rng.randrange(size), rng.randrange(size))
            if q not in seen:
                seen.add(q)
                pts.append(Point(*q))
        ring = two_opt(pts, rng)
        if signed_area2(ring) < 0:
            ring.reverse()
        if is_simple(ring):
            return SimplePolygon(ring, validate=False)


def square() -> SimplePolygon:
    return SimplePolygon([(0, 0), (4, 0), (4, 4), (0, 4)])


def l_shape() -> SimplePolygon:
    return SimplePolygon([(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)])


def random_point_in(poly: SimplePolygon, rng: random.Random, denom: int = 64):
    """Rejection-sample a point of the closed polygon on a fine rational grid."""
    from .geometry import Location

    x0, y0, x1, y1 = poly.bbox()
    while True:
        x = x0 + (x1 - x0) * Fraction(rng.randrange(denom + 1), denom)
        y = y0 + (y1 - y0) * Fraction(rng.randrange(denom + 1), denom)
        p = Point(x, y)
        if poly.locate(p)[0] is not Location.EXTERIOR:
            return p


class BoundarySampler:
    """Draws boundary points with probability roughly proportional to edge
    length (L1), at rational parameters with denominator ``denom``."""

    def __init__(self, poly: SimplePolygon, denom: int = 1 << 16):
        self.poly = poly
        self.denom = denom
        acc = 0.0
        self.cum = []
        for a, b in poly.edges:
            acc += abs(float(b.x - a.x)) + abs(float(b.y - a.y))
            self.cum.append(acc)
        self.idx = range(poly.n)

    def draw(self, rng: random.Random) -> Point:
        poly = self.poly
        i = rng.choices(self.idx, cum_weights=self.cum)[0]
        a, b = poly.vertices[i], poly.vertices[(i + 1) % poly.n]
        t = Fraction(rng.randrange(self.denom + 1), self.denom)
        return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def random_boundary_point(poly: SimplePolygon, rng: random.Random, denom: int = 1 << 16) -> Point:
    return BoundarySampler(poly, denom).draw(rng)


def corpus(include_combs: bool = True, random_count: int = 50, max_comb: int = 4) -> list:
    """The named test corpus as ``(name, polygon)`` pairs."""
    out = [("square", square()), ("l-shape", l_shape())]
    if include_combs:
        from .comb import generate_comb

        for k in range(1, max_comb + 1):
            out.append((f"comb-{k}", generate_comb(k).polygon))
    for seed in range(random_count):
        out.append((f"random-{seed}", random_simple_polygon(seed)))
    return out
