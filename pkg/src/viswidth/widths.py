"""Point and chord visibility width.

pvw is exact: the number of reflex vertices seen is constant on the cells
of the arrangement formed by the visibility regions of the reflex vertices,
and every closed cell has a vertex, so evaluating all arrangement vertices
finds the maximum.

cvw is computed over candidate chords: maximal chords on lines through two
event points.  Counts only change when a line sweeps across an event point,
which is why the set works well in practice; it is validated against random
sampling rather than proven.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidChord
from .geometry import (
    Chord,
    Location,
    Point,
    SimplePolygon,
    as_point,
    orient_h,
    segment_inside,
)
from .visibility import sees, visibility_map, visibility_polygon

DEFAULT_LINE_CAP = 200_000


class Method(enum.Enum):
    EXACT_EVENT_POINTS = "ExactEventPoints"
    CANDIDATE_CERTIFIED = "CandidateCertified"
    SAMPLED_LOWER_BOUND = "SampledLowerBound"


@dataclass(frozen=True)
class WidthResult:
    value: int
    witness: Union[Point, Chord, None]
    method: Method
    candidates_examined: int

    def to_json(self, key: str) -> dict:
        w = self.witness
        return {
            key: self.value,
            "witness": None if w is None else w.to_json(),
            "method": self.method.value,
            "candidates": self.candidates_examined,
        }


# -- point width ------------------------------------------------------------


def reflex_depth(poly: SimplePolygon, p) -> int:
    """Number of reflex vertices seen from ``p``, by the segment oracle."""
    p = as_point(p)
    return sum(1 for r in poly.reflex_vertices if sees(poly, p, r))


def _fast_depth(poly: SimplePolygon, p: Point) -> int:
    return sum(1 for r in poly.reflex_vertices if visibility_map(poly, r).contains(p))


def _segment_crossing(s1, s2) -> Optional[Point]:
    """Intersection point of two segments that meet in exactly one point."""
    a, b = s1
    c, d = s2
    d1 = orient_h(a.h, b.h, c.h)
    d2 = orient_h(a.h, b.h, d.h)
    if d1 == d2 and d1 != 0:
        return None
    d3 = orient_h(c.h, d.h, a.h)
    d4 = orient_h(c.h, d.h, b.h)
    if d3 == d4 and d3 != 0:
        return None
    if d1 == 0 and d2 == 0:
        return None  # collinear; any overlap ends at segment endpoints already listed
    ex, ey = b.x - a.x, b.y - a.y
    fx, fy = d.x - c.x, d.y - c.y
    den = ex * fy - ey * fx
    t = ((c.x - a.x) * fy - (c.y - a.y) * fx) / den
    return Point(a.x + t * ex, a.y + t * ey)


def pvw_candidates(poly: SimplePolygon) -> list:
    """Arrangement vertices: polygon vertices, visibility-region vertices,
    spur endpoints, and crossings of windows and spurs of different regions."""
    pts = set(poly.vertices)
    cuts = []
    for r in poly.reflex_vertices:
        reg = visibility_polygon(poly, r)
        pts.update(reg.boundary.vertices)
        for s in reg.spurs:
            pts.update((s.a, s.b))
        for s in tuple(reg.windows) + tuple(reg.spurs):
            xs = sorted((s.a.x, s.b.x))
            ys = sorted((s.a.y, s.b.y))
            cuts.append((r, (s.a, s.b), xs, ys))
    cuts.sort(key=lambda z: z[2][0])
    for i, (r1, s1, xs1, ys1) in enumerate(cuts):
        for r2, s2, xs2, ys2 in cuts[i + 1 :]:
            if xs2[0] > xs1[1]:
                break
            if r1 == r2 or ys2[0] > ys1[1] or ys1[0] > ys2[1]:
                continue
            q = _segment_crossing(s1, s2)
            if q is not None:
                pts.add(q)
    return sorted(pts)


def pvw(poly: SimplePolygon) -> WidthResult:
    """Exact point visibility width with the lexicographically least witness."""
    if not poly.reflex_indices:
        return WidthResult(0, min(poly.vertices), Method.EXACT_EVENT_POINTS, poly.n)
    cands = pvw_candidates(poly)
    total = len(poly.reflex_indices)
    best, witness = -1, None
    for p in cands:  # sorted, so the first maximizer is the least
        d = _fast_depth(poly, p)
        if d > best:
            best, witness = d, p
            if best == total:
                break
    return WidthResult(best, witness, Method.EXACT_EVENT_POINTS, len(cands))


# -- chord width ------------------------------------------------------------


def chord_reflex_count(poly: SimplePolygon, c: Chord, *, at_least: int = 0) -> int:
    """Reflex vertices that see some point of ``c``.

    With ``at_least`` set, counting may stop early and return any value
    below ``at_least`` once that bound is out of reach.
    """
    if not isinstance(c, Chord):
        raise InvalidChord("expected a Chord")
    a, b = c.a, c.b
    refl = poly.reflex_vertices
    remaining = len(refl)
    count = 0
    for r in refl:
        remaining -= 1
        if visibility_map(poly, r).sees_segment(a, b):
            count += 1
        elif count + remaining < at_least:
            return count
    return count


def maximal_chords_on_line(poly: SimplePolygon, p: Point, q: Point) -> list:
    """The maximal chords on the line through p and q, in order along it."""
    ph, qh = p.h, q.h
    verts = poly.vertices
    n = poly.n
    dx, dy = q.x - p.x, q.y - p.y
    sides = [orient_h(ph, qh, h) for h in poly.hs]
    ts = set()

    def param(x):
        if dx:
            return (x.x - p.x) / dx
        return (x.y - p.y) / dy

    for i in range(n):
        s1 = sides[i]
        if s1 == 0:
            ts.add(param(verts[i]))
            continue
        j = i + 1 if i + 1 < n else 0
        s2 = sides[j]
        if s2 != 0 and s1 != s2:
            u, v = verts[i], verts[j]
            ex, ey = v.x - u.x, v.y - u.y
            t = ((u.x - p.x) * ey - (u.y - p.y) * ex) / (dx * ey - dy * ex)
            ts.add(t)
    ts = sorted(ts)

    def at(t):
        return Point(p.x + t * dx, p.y + t * dy)

    out = []
    start = None
    for t0, t1 in zip(ts, ts[1:]):
        inside = poly.locate(at((t0 + t1) / 2))[0] is not Location.EXTERIOR
        if inside:
            if start is None:
                start = t0
            end = t1
        elif start is not None:
            out.append((start, end))
            start = None
    if start is not None:
        out.append((start, end))
    return [Chord(poly, *sorted((at(t0), at(t1)))) for t0, t1 in out]


def _line_key(p: Point, q: Point):
    """Normalized integer coefficients (A, B, C) of the line A x + B y = C."""
    from math import gcd

    X1, Y1, W1 = p.h
    X2, Y2, W2 = q.h
    A = Y1 * W2 - Y2 * W1
    B = X2 * W1 - X1 * W2
    C = X2 * Y1 - X1 * Y2
    g = gcd(gcd(A, B), C)
    A, B, C = A // g, B // g, C // g
    if A < 0 or (A == 0 and B < 0):
        A, B, C = -A, -B, -C
    return A, B, C


def cvw_event_points(poly: SimplePolygon) -> list:
    pts = set(poly.vertices)
    for r in poly.reflex_vertices:
        reg = visibility_polygon(poly, r)
        pts.update(reg.boundary.vertices)
        for s in reg.spurs:
            pts.update((s.a, s.b))
    return sorted(pts)


def _better(count, chord, best, best_chord) -> bool:
    if count != best:
        return count > best
    return chord.sort_key() < best_chord.sort_key()


def cvw(
    poly: SimplePolygon,
    mode: str = "certified",
    sample_count: int = 10_000,
    *,
    seed: int = 0,
    line_cap: int = DEFAULT_LINE_CAP,
) -> WidthResult:
    """Chord visibility width.

    ``mode`` is ``"certified"`` (candidate chords through event points) or
    ``"sampled"`` (random boundary point pairs, a lower bound).
    """
    mode = _mode(mode)
    if mode is Method.SAMPLED_LOWER_BOUND:
        return _cvw_sampled(poly, sample_count, seed)
    return _cvw_certified(poly, line_cap, sample_count, seed)


def _mode(mode) -> Method:
    if isinstance(mode, Method):
        return mode
    key = str(mode).lower()
    if key in ("certified", "candidatecertified"):
        return Method.CANDIDATE_CERTIFIED
    if key in ("sampled", "sampledlowerbound"):
        return Method.SAMPLED_LOWER_BOUND
    raise ValueError(f"unknown cvw mode {mode!r}")


def _cvw_certified(poly, line_cap, sample_count, seed) -> WidthResult:
    total = len(poly.reflex_indices)
    pts = cvw_event_points(poly)
    lines = set()
    best, best_chord = -1, None
    examined = 0
    capped = False
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            key = _line_key(p, q)
            if key in lines:
                continue
            if len(lines) >= line_cap:
                capped = True
                break
            lines.add(key)
            for ch in maximal_chords_on_line(poly, p, q):
                examined += 1
                cnt = chord_reflex_count(poly, ch, at_least=best)
                if best_chord is None or _better(cnt, ch, best, best_chord):
                    best, best_chord = cnt, ch
            if best == total:
                break
        if capped or best == total:
            break
    if capped:
        sampled = _cvw_sampled(poly, sample_count, seed)
        if best_chord is None or _better(sampled.value, sampled.witness, best, best_chord):
            best, best_chord = sampled.value, sampled.witness
        examined += sampled.candidates_examined
        return WidthResult(best, best_chord, Method.SAMPLED_LOWER_BOUND, examined)
    return WidthResult(best, best_chord, Method.CANDIDATE_CERTIFIED, examined)


def random_chord(poly: SimplePolygon, rng: random.Random, max_attempts: int = 1000, sampler=None) -> Optional[Chord]:
    """A valid chord between two random boundary points, or None."""
    from .randpoly import BoundarySampler

    sampler = sampler or BoundarySampler(poly)
    for _ in range(max_attempts):
        a = sampler.draw(rng)
        b = sampler.draw(rng)
        if a != b and segment_inside(poly, a, b):
            return Chord(poly, a, b)
    return None


def extend_chord(poly: SimplePolygon, c: Chord) -> Chord:
    """The maximal chord containing ``c``."""
    for ch in maximal_chords_on_line(poly, c.a, c.b):
        if ch.segment.contains(c.a) and ch.segment.contains(c.b):
            return ch
    return c


def _cvw_sampled(poly, sample_count, seed) -> WidthResult:
    from .randpoly import BoundarySampler

    if sample_count < 1:
        raise ValueError("sample_count must be at least 1")
    rng = random.Random(seed)
    sampler = BoundarySampler(poly)
    total = len(poly.reflex_indices)
    best, best_chord = -1, None
    valid = 0
    for _ in range(sample_count * 50):
        if valid >= sample_count:
            break
        c = random_chord(poly, rng, max_attempts=1, sampler=sampler)
        if c is None:
            continue
        valid += 1
        ch = extend_chord(poly, c)
        if best == total and ch.sort_key() >= best_chord.sort_key():
            continue  # cannot beat the current witness
        cnt = chord_reflex_count(poly, ch, at_least=best)
        if best_chord is None or _better(cnt, ch, best, best_chord):
            best, best_chord = cnt, ch
    if best_chord is None:
        return WidthResult(0, None, Method.SAMPLED_LOWER_BOUND, valid)
    return WidthResult(best, best_chord, Method.SAMPLED_LOWER_BOUND, valid)


def restriction_size_bound(k: int) -> int:
    """2 + 2k + 2k^2 + ... + 2k^k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return 2 * sum(k**i for i in range(k + 1))
