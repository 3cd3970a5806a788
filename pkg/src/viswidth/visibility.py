"""Visibility in a simple polygon under closed semantics.

A point ``p`` sees ``q`` when the closed segment ``pq`` lies in the closed
polygon, so sight lines may graze the boundary.  The workhorse is
:class:`VisibilityMap`: the directions from a viewpoint to every polygon
vertex cut the plane into angular sectors, and inside each open sector the
first edge hit by a ray is fixed.  Together with the exact visible depth
along each critical ray this describes the visible set completely,
including zero-width spurs that only exist along a single ray.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional

from .errors import (
    EmptyInterval,
    InternalDisconnectedInterval,
    InternalError,
    InvalidChord,
    NotAReflexVertex,
    PointOutsidePolygon,
)
from .geometry import (
    Chord,
    Location,
    Point,
    IntersectionKind,
    Segment,
    SimplePolygon,
    as_point,
    cross,
    direction_h,
    dot,
    orient_h,
    segment_inside,
    segments_intersect,
)


def _half(d) -> int:
    return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1


def _angle_cmp(d1, d2) -> int:
    h1, h2 = _half(d1), _half(d2)
    if h1 != h2:
        return -1 if h1 < h2 else 1
    c = d1[0] * d2[1] - d1[1] * d2[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _strictly_between(d1, d2):
    """A direction strictly inside the counterclockwise arc from d1 to d2."""
    c = cross(d1, d2)
    if c > 0:
        return (d1[0] + d2[0], d1[1] + d2[1])
    if c < 0:
        return (-(d1[0] + d2[0]), -(d1[1] + d2[1]))
    if dot(d1, d2) < 0:
        return (-d1[1], d1[0])
    return (-d1[0], -d1[1])


def in_closed_wedge(poly: SimplePolygon, i: int, d) -> bool:
    """Does direction ``d`` leave vertex ``i`` into the closed polygon?"""
    e_out = poly.edge_dirs[i]
    prev = poly.edge_dirs[i - 1]
    e_back = (-prev[0], -prev[1])
    c1 = cross(e_out, d) >= 0
    c2 = cross(d, e_back) >= 0
    if poly.turns[i] < 0:
        return c1 or c2
    return c1 and c2


class VisibilityMap:
    """Exact description of the set of points seen from ``p``.

    Attributes
    ----------
    dirs : list of integer direction vectors, sorted by angle; only the
        directions where the visible set changes shape are kept.
    depth : for each direction, the visible extent ``s`` along it (the
        farthest seen point is ``p + s * d``).
    edge : for the open sector following each direction, the index of the
        polygon edge bounding the view there, or -1 when the sector points
        out of the polygon.
    """

    def __init__(self, poly: SimplePolygon, p):
        p = as_point(p)
        loc, vi, ei = poly.locate(p)
        if loc is Location.EXTERIOR:
            raise PointOutsidePolygon(f"{p!r} lies outside the polygon")
        self.poly = poly
        self.p = p
        self.vertex_index = vi
        self.edge_index = ei
        ph = p.h
        self._rel = [direction_h(ph, h) for h in poly.hs]

        raw = [d for i, d in enumerate(self._rel) if i != vi]
        raw.sort(key=cmp_to_key(_angle_cmp))
        dirs = []
        for d in raw:
            if dirs and _angle_cmp(dirs[-1], d) == 0:
                continue
            dirs.append(d)
        m = len(dirs)

        depth = [self._walk_depth(d) for d in dirs]
        edge = []
        start = []
        end = []
        for j in range(m):
            d1, d2 = dirs[j], dirs[(j + 1) % m]
            mid = _strictly_between(d1, d2) if m > 1 else (-d1[0], -d1[1])
            e = self._first_edge(mid) if self._leaves_inward(mid) else -1
            edge.append(e)
            if e >= 0:
                start.append(self._edge_param(e, d1))
                end.append(self._edge_param(e, d2))
            else:
                start.append(Fraction(0))
                end.append(Fraction(0))

        # drop directions across which nothing changes
        keep = []
        for j in range(m):
            prev = (j - 1) % m
            if m > 1 and edge[prev] == edge[j]:
                if edge[j] < 0 and depth[j] == 0:
                    continue
                if edge[j] >= 0 and depth[j] == end[prev] == start[j]:
                    continue
            keep.append(j)
        if not keep:
            keep = [0]
        if len(keep) < m:
            nd, ndep, ned, nst, nen = [], [], [], [], []
            for idx, j in enumerate(keep):
                nxt = keep[(idx + 1) % len(keep)]
                last = (nxt - 1) % m  # last original sector merged into this one
                nd.append(dirs[j])
                ndep.append(depth[j])
                ned.append(edge[j])
                nst.append(start[j])
                nen.append(end[last])
            dirs, depth, edge, start, end = nd, ndep, ned, nst, nen
        self.dirs = dirs
        self.depth = depth
        self.edge = edge
        self.start = start
        self.end = end
        self._halves = [_half(d) for d in dirs]
        self._region = None

    # -- construction helpers ------------------------------------------

    def _leaves_inward(self, d) -> bool:
        """Does the ray from p in direction d immediately enter the polygon?"""
        if self.vertex_index is not None:
            return in_closed_wedge(self.poly, self.vertex_index, d)
        if self.edge_index is not None:
            return cross(self.poly.edge_dirs[self.edge_index], d) >= 0
        return True

    def _walk_depth(self, d) -> Fraction:
        """Largest s with the segment [p, p + s d] inside the closed polygon."""
        if not self._leaves_inward(d):
            return Fraction(0)
        poly = self.poly
        rel = self._rel
        n = poly.n
        W = self.p.h[2]
        dd = dot(d, d)
        best = None
        sides = [cross(d, r) for r in rel]
        for i in range(n):
            s1 = sides[i]
            if s1 == 0:
                r = rel[i]
                k = dot(d, r)
                if k > 0 and not in_closed_wedge(poly, i, d):
                    s = Fraction(k, dd * W * poly.hs[i][2])
                    if best is None or s < best:
                        best = s
                continue
            j = i + 1 if i + 1 < n else 0
            s2 = sides[j]
            if s2 != 0 and (s1 > 0) != (s2 > 0):
                s = self._edge_param(i, d)
                if s > 0 and (best is None or s < best):
                    best = s
        if best is None:
            raise InternalError("ray never leaves the polygon")
        return best

    def _first_edge(self, d) -> int:
        """Index of the first edge crossed by the ray from p along d.

        ``d`` must not point at any vertex.
        """
        rel = self._rel
        n = self.poly.n
        sides = [cross(d, r) for r in rel]
        best = None
        best_e = -1
        for i in range(n):
            s1 = sides[i]
            j = i + 1 if i + 1 < n else 0
            s2 = sides[j]
            if s1 == 0 or s2 == 0 or (s1 > 0) == (s2 > 0):
                continue
            s = self._edge_param(i, d)
            if s > 0 and (best is None or s < best):
                best, best_e = s, i
        if best_e < 0:
            raise InternalError("open sector sees no edge")
        return best_e

    def _edge_param(self, e: int, d) -> Fraction:
        """Parameter s where the ray p + s d meets the line of edge e."""
        poly = self.poly
        u = poly.hs[e]
        ed = poly.edge_dirs[e]
        num = cross(self._rel[e], ed)
        den = cross(d, ed) * self.p.h[2] * u[2]
        if den == 0:
            raise InternalError("ray parallel to sector edge")
        return Fraction(num, den)

    # -- queries ---------------------------------------------------------

    def _locate_dir(self, d):
        """Return (j, exact): d equals dirs[j], or lies in the open sector j."""
        dirs = self.dirs
        halves = self._halves
        hd = _half(d)
        lo, hi = 0, len(dirs)
        # largest index with dirs[idx] <= d
        while lo < hi:
            mid = (lo + hi) // 2
            dm = dirs[mid]
            hm = halves[mid]
            if hm < hd or (hm == hd and dm[0] * d[1] - dm[1] * d[0] >= 0):
                lo = mid + 1
            else:
                hi = mid
        j = lo - 1
        if j < 0:
            return len(dirs) - 1, False
        dj = dirs[j]
        exact = halves[j] == hd and dj[0] * d[1] - dj[1] * d[0] == 0
        return j, exact

    def reach(self, d) -> Fraction:
        """Visible extent along an arbitrary direction ``d``."""
        j, exact = self._locate_dir(d)
        if exact:
            dj = self.dirs[j]
            # rescale the stored depth from dirs[j] to d
            return self.depth[j] * Fraction(dj[0] if dj[0] else dj[1], d[0] if d[0] else d[1])
        e = self.edge[j]
        if e < 0:
            return Fraction(0)
        return self._edge_param(e, d)

    def contains(self, x) -> bool:
        """Is ``x`` seen from the viewpoint?"""
        x = as_point(x)
        if x == self.p:
            return True
        d = direction_h(self.p.h, x.h)
        j, exact = self._locate_dir(d)
        if exact:
            dj = self.dirs[j]
            # x = p + s dj with s = |d| / |dj| (same direction)
            k = dj[0] if dj[0] else dj[1]
            kd = d[0] if d[0] else d[1]
            s = Fraction(kd, k * self.p.h[2] * x.h[2])
            return s <= self.depth[j]
        e = self.edge[j]
        if e < 0:
            return False
        poly = self.poly
        return orient_h(poly.hs[e], poly.hs[(e + 1) % poly.n], x.h) >= 0

    def visible_params(self, a: Point, b: Point):
        """Closed parameter intervals of ``a + t (b - a)``, t in [0, 1], seen from p.

        Returns a sorted list of disjoint ``(lo, hi)`` pairs.
        """
        ph = self.p.h
        if orient_h(a.h, b.h, ph) == 0:
            return self._collinear_params(a, b)
        da = direction_h(ph, a.h)
        db = direction_h(ph, b.h)
        ccw = cross(da, db) > 0
        lo_d, hi_d = (da, db) if ccw else (db, da)
        dirs = self.dirs
        m = len(dirs)
        j0, _ = self._locate_dir(lo_d)
        inside = []
        idx = (j0 + 1) % m
        for _ in range(m):
            d = dirs[idx]
            if cross(lo_d, d) > 0 and cross(d, hi_d) > 0:
                inside.append(idx)
                idx = (idx + 1) % m
            else:
                break
        # chord parameter of each critical ray
        ax, ay = a.x, a.y
        bx, by = b.x, b.y
        px, py = self.p.x, self.p.y
        ex, ey = bx - ax, by - ay
        qx, qy = px - ax, py - ay
        crits = []
        for j in inside:
            d = dirs[j]
            den = ex * d[1] - ey * d[0]
            t = (qx * d[1] - qy * d[0]) / den
            # x(t) = p + s d
            s = (qx * ey - qy * ex) / den
            crits.append((t, j, s))
        crits.sort()
        # sector of each open piece, in order of increasing t
        if ccw:
            sectors = [j0] + [j for _, j, _ in crits]
        else:
            # t grows while the direction turns clockwise from da
            ja, exact_a = self._locate_dir(da)
            first = (ja - 1) % m if exact_a else ja
            sectors = [first] + [(j - 1) % m for _, j, _ in crits]
        ts = [Fraction(0)] + [t for t, _, _ in crits] + [Fraction(1)]
        pieces = []
        if self.contains(a):
            pieces.append((ts[0], ts[0]))
        for t, j, s in crits:
            if s <= self.depth[j]:
                pieces.append((t, t))
        if self.contains(b):
            pieces.append((ts[-1], ts[-1]))
        poly = self.poly
        for i, sec in enumerate(sectors):
            t0, t1 = ts[i], ts[i + 1]
            if t0 == t1:
                continue
            e = self.edge[sec]
            if e < 0:
                continue
            u = poly.vertices[e]
            v = poly.vertices[(e + 1) % poly.n]
            vx, vy = v.x - u.x, v.y - u.y
            f0 = vx * (ay - u.y) - vy * (ax - u.x)
            f1 = vx * (by - u.y) - vy * (bx - u.x)
            g0 = f0 + t0 * (f1 - f0)
            g1 = f0 + t1 * (f1 - f0)
            if g0 >= 0 and g1 >= 0:
                pieces.append((t0, t1))
            elif g0 >= 0 > g1:
                root = t0 + (t1 - t0) * g0 / (g0 - g1)
                if root > t0:
                    pieces.append((t0, root))
            elif g1 >= 0 > g0:
                root = t0 + (t1 - t0) * g0 / (g0 - g1)
                if root < t1:
                    pieces.append((root, t1))
        return _merge(pieces)

    def _collinear_params(self, a: Point, b: Point):
        p = self.p
        ex, ey = b.x - a.x, b.y - a.y
        ee = ex * ex + ey * ey

        def param(q: Point) -> Fraction:
            return ((q.x - a.x) * ex + (q.y - a.y) * ey) / ee

        def far_param(target: Point) -> Fraction:
            d = direction_h(p.h, target.h)
            s = self.reach(d)
            return param(Point(p.x + s * d[0], p.y + s * d[1]))

        tp = param(p)
        if 0 <= tp <= 1:
            lo = tp if p == a else max(Fraction(0), far_param(a))
            hi = tp if p == b else min(Fraction(1), far_param(b))
            return [(lo, hi)]
        if tp < 0:
            tf = far_param(b)
            return [] if tf < 0 else [(Fraction(0), min(Fraction(1), tf))]
        tf = far_param(a)
        return [] if tf > 1 else [(max(Fraction(0), tf), Fraction(1))]

    def sees_segment(self, a: Point, b: Point) -> bool:
        if self.contains(a) or self.contains(b):
            return True
        return bool(self.visible_params(a, b))

    # -- region ----------------------------------------------------------

    def spurs(self) -> list:
        """Zero-width visible pieces: parts of critical rays beyond the region."""
        out = []
        m = len(self.dirs)
        for j in range(m):
            prev = (j - 1) % m
            near = self.end[prev] if self.edge[prev] >= 0 else Fraction(0)
            far = self.start[j] if self.edge[j] >= 0 else Fraction(0)
            reach = max(near, far)
            if self.depth[j] > reach:
                d = self.dirs[j]
                out.append(
                    Segment(self._at(d, reach), self._at(d, self.depth[j]))
                )
        return out

    def _at(self, d, s) -> Point:
        return Point(self.p.x + s * d[0], self.p.y + s * d[1])

    def region(self) -> "VisibilityRegion":
        if self._region is None:
            self._region = _build_region(self)
        return self._region


def _merge(pieces):
    if not pieces:
        return []
    pieces.sort()
    out = [list(pieces[0])]
    for lo, hi in pieces[1:]:
        if lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return [(lo, hi) for lo, hi in out]


def _drop_redundant(points):
    """Remove consecutive duplicates and straight (collinear, pass-through)
    vertices from a closed ring."""
    ring = []
    for q in points:
        if not ring or ring[-1] != q:
            ring.append(q)
    while len(ring) > 1 and ring[0] == ring[-1]:
        ring.pop()
    changed = True
    while changed and len(ring) > 3:
        changed = False
        out = []
        n = len(ring)
        for i in range(n):
            u, v, w = ring[i - 1], ring[i], ring[(i + 1) % n]
            if orient_h(u.h, v.h, w.h) == 0 and dot(direction_h(u.h, v.h), direction_h(v.h, w.h)) > 0:
                changed = True
                continue
            out.append(v)
        if changed:
            ring = out
    return ring


@dataclass(frozen=True)
class VisibilityRegion:
    """The part of a polygon seen from ``owner``.

    ``boundary`` is the closure of the visible interior; ``windows`` are its
    edges that cross the polygon interior, each written from its anchoring
    reflex vertex to the point where it meets the boundary again.  ``spurs``
    lists visible segments of zero width that the boundary cannot express.
    """

    owner: Point
    boundary: SimplePolygon
    windows: tuple
    spurs: tuple = ()

    def contains(self, x) -> bool:
        x = as_point(x)
        if self.boundary.locate(x)[0] is not Location.EXTERIOR:
            return True
        return any(s.contains(x) for s in self.spurs)

    def to_json(self) -> dict:
        return {
            "owner": self.owner.to_json(),
            "vertices": [q.to_json() for q in self.boundary.vertices],
            "windows": [w.to_json() for w in self.windows],
            "spurs": [s.to_json() for s in self.spurs],
        }


def _build_region(vm: VisibilityMap) -> VisibilityRegion:
    m = len(vm.dirs)
    ring = []
    for j in range(m):
        if vm.edge[j] >= 0:
            d1, d2 = vm.dirs[j], vm.dirs[(j + 1) % m]
            ring.append(vm._at(d1, vm.start[j]))
            ring.append(vm._at(d2, vm.end[j]))
        else:
            ring.append(vm.p)
    ring = _drop_redundant(ring)
    boundary = SimplePolygon(ring, validate=True)
    windows = _windows(vm, boundary)
    return VisibilityRegion(vm.p, boundary, tuple(windows), tuple(vm.spurs()))


def _windows(vm: VisibilityMap, boundary: SimplePolygon):
    poly = vm.poly
    ph = vm.p.h
    out = []
    ring = boundary.vertices
    k = len(ring)
    for i in range(k):
        A, B = ring[i], ring[(i + 1) % k]
        if orient_h(ph, A.h, B.h) != 0:
            continue
        d = direction_h(A.h, B.h)
        stops = [A, B]
        for idx, v in enumerate(poly.vertices):
            if v != A and v != B and orient_h(A.h, B.h, v.h) == 0:
                if dot(direction_h(A.h, v.h), d) > 0 and dot(direction_h(v.h, B.h), d) > 0:
                    stops.append(v)
        stops.sort(key=lambda q: dot(direction_h(A.h, q.h), d) * Fraction(1, q.h[2]))
        for u, v in zip(stops, stops[1:]):
            if poly.locate(u.midpoint(v))[0] is Location.BOUNDARY:
                continue
            # anchor is the endpoint closer to the viewpoint
            near, far = (v, u) if _dist2(vm.p, v) < _dist2(vm.p, u) else (u, v)
            out.append(Segment(near, far))
    return out


def _dist2(p: Point, q: Point) -> Fraction:
    dx, dy = q.x - p.x, q.y - p.y
    return dx * dx + dy * dy


# --- public operations ---------------------------------------------------


def visibility_map(poly: SimplePolygon, p) -> VisibilityMap:
    """Visibility map of ``p``; maps of polygon vertices are cached."""
    p = as_point(p)
    if p in poly.index:
        vm = poly._vis_cache.get(p)
        if vm is None:
            vm = poly._vis_cache[p] = VisibilityMap(poly, p)
        return vm
    return VisibilityMap(poly, p)


def sees(poly: SimplePolygon, p, q) -> bool:
    """Closed visibility between two points of the polygon."""
    p, q = as_point(p), as_point(q)
    for x in (p, q):
        if poly.locate(x)[0] is Location.EXTERIOR:
            raise PointOutsidePolygon(f"{x!r} lies outside the polygon")
    return segment_inside(poly, p, q)


def visibility_polygon(poly: SimplePolygon, p) -> VisibilityRegion:
    return visibility_map(poly, p).region()


@dataclass(frozen=True)
class ChordInterval:
    """Sub-segment ``I(r)`` of a chord seen by the reflex vertex ``owner``.

    ``lo`` and ``hi`` are chord parameters (0 at ``chord.a``, 1 at
    ``chord.b``).  Each end is attributed to a restrictor: a chord endpoint or
    the reflex vertex the limiting sight line grazes.
    """

    chord: Chord
    owner: Point
    lo: Fraction
    hi: Fraction
    lo_restrictor: Point
    hi_restrictor: Point

    @property
    def segment(self) -> Segment:
        return Segment(self.start, self.stop, degenerate=self.lo == self.hi)

    @property
    def start(self) -> Point:
        return self.chord.point_at(self.lo)

    @property
    def stop(self) -> Point:
        return self.chord.point_at(self.hi)

    def issubset(self, other) -> bool:
        if other is None:
            return False
        lo, hi = (other.lo, other.hi) if isinstance(other, ChordInterval) else other
        return lo <= self.lo and self.hi <= hi

    def to_json(self) -> dict:
        return {
            "owner": self.owner.to_json(),
            "lo": str(self.lo),
            "hi": str(self.hi),
            "lo_restrictor": self.lo_restrictor.to_json(),
            "hi_restrictor": self.hi_restrictor.to_json(),
        }


def _check_chord(poly: SimplePolygon, c: Chord):
    if not isinstance(c, Chord) or c.polygon is not poly and c.polygon != poly:
        raise InvalidChord("chord does not belong to this polygon")


def chord_interval(poly: SimplePolygon, c: Chord, r) -> Optional[ChordInterval]:
    """The chord parameters seen by reflex vertex ``r``, or None if it sees none."""
    r = as_point(r)
    _check_chord(poly, c)
    if not poly.is_reflex(r):
        raise NotAReflexVertex(f"{r!r} is not a reflex vertex")
    vm = visibility_map(poly, r)
    parts = vm.visible_params(c.a, c.b)
    if not parts:
        return None
    if len(parts) > 1:
        raise InternalDisconnectedInterval(f"{r!r} sees {len(parts)} pieces of {c!r}")
    lo, hi = parts[0]
    return ChordInterval(
        c, r, lo, hi, _restrictor(poly, c, r, lo), _restrictor(poly, c, r, hi)
    )


def _restrictor(poly: SimplePolygon, c: Chord, r: Point, t: Fraction) -> Point:
    if t == 0:
        return c.a
    if t == 1:
        return c.b
    x = c.point_at(t)
    rh, xh = r.h, x.h
    cands = [poly.vertices[i] for i in poly.reflex_indices]
    cands += [c.a, c.b]
    found = []
    for u in cands:
        if u == r:
            continue
        if orient_h(rh, xh, u.h) == 0 and dot(direction_h(rh, u.h), direction_h(u.h, xh)) >= 0:
            found.append(u)
    if not found:
        raise InternalError(f"no restrictor for {r!r} at t={t}")
    return min(found, key=lambda u: (_dist2_to_segment(u, c.a, c.b), u.x, u.y))


def _dist2_to_segment(p: Point, a: Point, b: Point) -> Fraction:
    ex, ey = b.x - a.x, b.y - a.y
    t = ((p.x - a.x) * ex + (p.y - a.y) * ey) / (ex * ex + ey * ey)
    t = min(Fraction(1), max(Fraction(0), t))
    dx = a.x + t * ex - p.x
    dy = a.y + t * ey - p.y
    return dx * dx + dy * dy


def restrictors_of(interval: Optional[ChordInterval]):
    if interval is None:
        raise EmptyInterval("an empty interval has no restrictors")
    return interval.lo_restrictor, interval.hi_restrictor


def chord_visible_from(poly: SimplePolygon, c: Chord, x) -> bool:
    """Does some point of chord ``c`` see ``x``?"""
    return visibility_map(poly, x).sees_segment(c.a, c.b)


def _boundary_key(poly: SimplePolygon, x: Point, origin):
    """Position of boundary point ``x`` counterclockwise from ``origin``."""
    _, vi, ei = poly.locate(x)
    if vi is not None:
        i, t = vi, Fraction(0)
    elif ei is not None:
        u, v = poly.vertices[ei], poly.vertices[(ei + 1) % poly.n]
        ex, ey = v.x - u.x, v.y - u.y
        i, t = ei, ((x.x - u.x) * ex + (x.y - u.y) * ey) / (ex * ex + ey * ey)
    else:
        raise InternalError(f"{x!r} is not on the boundary")
    if origin is None:
        return i, t
    oi, ot = origin
    rel = (i - oi) % poly.n
    if rel == 0 and t < ot:
        rel = poly.n
    return rel, t


def _cut_pieces(poly: SimplePolygon, u: Point, w: Point):
    """Split segment uw at polygon vertices; keep pieces through the interior."""
    d = direction_h(u.h, w.h)
    stops = [u, w]
    for v in poly.vertices:
        if v != u and v != w and orient_h(u.h, w.h, v.h) == 0:
            if dot(direction_h(u.h, v.h), d) > 0 and dot(direction_h(v.h, w.h), d) > 0:
                stops.append(v)
    stops.sort(key=lambda q: dot(direction_h(u.h, q.h), d) * Fraction(1, q.h[2]))
    out = []
    for p0, p1 in zip(stops, stops[1:]):
        if poly.locate(p0.midpoint(p1))[0] is Location.INTERIOR:
            out.append(Segment(p0, p1))
    return out


@dataclass(frozen=True)
class WeakVisibilityRegion:
    """Points seen by at least one point of ``chord``.

    ``boundary`` bounds the two-dimensional part; ``windows`` are the cuts
    separating it from invisible pockets.  :meth:`contains` is exact,
    including zero-width visible pieces inside pockets.
    """

    chord: Chord
    boundary: SimplePolygon
    windows: tuple

    def contains(self, x) -> bool:
        x = as_point(x)
        if self.boundary.locate(x)[0] is not Location.EXTERIOR:
            return True
        poly = self.chord.polygon
        if poly.locate(x)[0] is Location.EXTERIOR:
            return False
        return chord_visible_from(poly, self.chord, x)

    def covers_polygon(self) -> bool:
        return self.boundary == self.chord.polygon or (
            set(self.boundary.vertices) >= set(self.chord.polygon.vertices) and not self.windows
        )

    def to_json(self) -> dict:
        return {
            "chord": self.chord.to_json(),
            "vertices": [q.to_json() for q in self.boundary.vertices],
            "windows": [w.to_json() for w in self.windows],
        }


def weak_visibility(poly: SimplePolygon, c: Chord) -> WeakVisibilityRegion:
    """Weak visibility region of chord ``c``.

    Every window of the region lies on a line through a reflex vertex ``r``
    and an end of ``I(r)``.  Each such line, continued past ``r`` to the
    boundary, cuts off a pocket; pockets whose points next to the cut are
    all hidden from the chord are removed.
    """
    _check_chord(poly, c)
    a, b = c.a, c.b
    pieces = []
    seen = set()
    for i in poly.reflex_indices:
        r = poly.vertices[i]
        ci = chord_interval(poly, c, r)
        if ci is None:
            continue
        vm = visibility_map(poly, r)
        for t in {ci.lo, ci.hi}:
            x = c.point_at(t)
            if x == r:
                continue
            d = direction_h(x.h, r.h)
            s = vm.reach(d)
            if s == 0:
                continue
            h = vm._at(d, s)
            for seg in _cut_pieces(poly, r, h):
                key = frozenset((seg.a, seg.b))
                if key not in seen:
                    seen.add(key)
                    pieces.append(seg)

    origin = _boundary_key(poly, a, None)
    key_b = _boundary_key(poly, b, origin)
    pockets = []
    for seg in pieces:
        ku = _boundary_key(poly, seg.a, origin)
        kw = _boundary_key(poly, seg.b, origin)
        if _lo_hi_split(ku, kw, key_b):
            continue
        # the pocket runs counterclockwise from the low key to the high key,
        # so it lies left of the cut walked from its high end to its low end
        if ku <= kw:
            lo, hi, cut = ku, kw, Segment(seg.b, seg.a)
        else:
            lo, hi, cut = kw, ku, seg
        if _pocket_hidden(poly, c, cut, pieces, seg):
            pockets.append((lo, hi, seg))

    pockets.sort(key=lambda z: (z[0], _neg_key(z[1])))
    kept = []
    for lo, hi, seg in pockets:
        if kept and hi <= kept[-1][1]:
            continue
        if kept and lo < kept[-1][1]:
            raise InternalError("weak visibility pockets overlap")
        kept.append((lo, hi, seg))

    events = []
    for i, v in enumerate(poly.vertices):
        k = _boundary_key(poly, v, origin)
        if any(lo < k < hi for lo, hi, _ in kept):
            continue
        events.append((k, 1, v))
    for lo, hi, seg in kept:
        pa, pb = (seg.a, seg.b) if _boundary_key(poly, seg.a, origin) == lo else (seg.b, seg.a)
        events.append((lo, 0, pa))
        events.append((hi, 2, pb))
    events.sort(key=lambda z: (z[0], z[1]))
    ring = _drop_redundant([v for _, _, v in events])
    boundary = SimplePolygon(ring, validate=True)
    return WeakVisibilityRegion(c, boundary, tuple(seg for _, _, seg in kept))


def _lo_hi_split(k1, k2, kb) -> bool:
    lo, hi = min(k1, k2), max(k1, k2)
    return lo < kb < hi


def _neg_key(k):
    return (-k[0], -k[1])


def _pocket_hidden(poly, c, cut, pieces, seg) -> bool:
    """Is every point just left of ``cut`` hidden from chord c?"""
    u, w = cut.a, cut.b
    dx, dy = w.x - u.x, w.y - u.y
    ee = dx * dx + dy * dy
    ts = {Fraction(0), Fraction(1)}
    for other in pieces:
        if other is seg:
            continue
        hit = segments_intersect(cut, other)
        if hit.kind is IntersectionKind.POINT:
            q = hit.point
            ts.add(((q.x - u.x) * dx + (q.y - u.y) * dy) / ee)
    ts = sorted(ts)
    nx, ny = -dy, dx
    nn = nx * nx + ny * ny
    for t0, t1 in zip(ts, ts[1:]):
        tm = (t0 + t1) / 2
        m = Point(u.x + tm * dx, u.y + tm * dy)
        gap = min(
            [_dist2_to_segment(m, e.a, e.b) for e in poly.edges]
            + [_dist2_to_segment(m, o.a, o.b) for o in pieces if o is not seg]
        )
        lam = Fraction(1)
        while lam * lam * nn * 4 >= gap:
            lam /= 2
        q = Point(m.x + lam * nx, m.y + lam * ny)
        if chord_visible_from(poly, c, q):
            return False
    return True


__all__ = [
    "ChordInterval",
    "VisibilityMap",
    "VisibilityRegion",
    "chord_interval",
    "chord_visible_from",
    "in_closed_wedge",
    "restrictors_of",
    "sees",
    "visibility_map",
    "visibility_polygon",
    "weak_visibility",
    "WeakVisibilityRegion",
]
