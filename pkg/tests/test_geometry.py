from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from viswidth import (
    EndpointNotOnBoundary,
    IntersectionKind,
    Location,
    NotSimpleError,
    Orientation,
    Point,
    Segment,
    SegmentLeavesPolygon,
    SimplePolygon,
    contains_point,
    is_simple,
    make_chord,
    orientation,
    reflex_vertices,
    segments_intersect,
)
from viswidth.geometry import as_rational, simplicity_violation
from viswidth.randpoly import random_simple_polygon

L_VERTS = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


def P(x, y):
    return Point(x, y)


class TestRational:
    def test_strings(self):
        assert as_rational("3/6") == Fraction(1, 2)
        assert as_rational("-7") == -7
        assert as_rational(" 10 / 4 ") == Fraction(5, 2)

    def test_float_is_exact(self):
        assert as_rational(0.1) == Fraction(3602879701896397, 36028797018963968)

    @pytest.mark.parametrize("bad", ["1.5", "a/b", "1/", "", "2e3"])
    def test_rejects_garbage(self, bad):
        with pytest.raises(ValueError):
            as_rational(bad)

    def test_rejects_bool(self):
        with pytest.raises(TypeError):
            as_rational(True)

    def test_point_order_and_hash(self):
        assert P(0, 5) < P(1, 0) < P(1, 2)
        assert P("1/2", 1) == P(Fraction(2, 4), "1")
        assert len({P("1/2", 1), P(Fraction(1, 2), 1)}) == 1


class TestOrientation:
    def test_examples(self):
        assert orientation(P(0, 0), P(1, 0), P(0, 1)) is Orientation.LEFT
        assert orientation(P(0, 0), P(1, 1), P(2, 2)) is Orientation.COLLINEAR
        assert orientation(P(0, 0), P(0, 1), P(1, 0)) is Orientation.RIGHT

    def test_large_coordinates(self):
        big = 2**63 - 1
        a, b = P(0, 0), P(big, big - 1)
        c = P(Fraction(big, 3), Fraction(big - 1, 3))
        assert orientation(a, b, c) is Orientation.COLLINEAR
        d = P(Fraction(big, 3), Fraction(big - 1, 3) + Fraction(1, 10**30))
        assert orientation(a, b, d) is Orientation.LEFT

    @given(
        st.tuples(*[st.fractions(max_denominator=50) for _ in range(6)]),
    )
    def test_antisymmetric(self, c):
        p, q, r = P(c[0], c[1]), P(c[2], c[3]), P(c[4], c[5])
        assert orientation(p, q, r) == -orientation(p, r, q)


class TestSegments:
    def test_crossing(self):
        hit = segments_intersect(Segment(P(0, 0), P(2, 2)), Segment(P(0, 2), P(2, 0)))
        assert hit.kind is IntersectionKind.POINT and hit.point == P(1, 1)

    def test_disjoint_collinear(self):
        hit = segments_intersect(Segment(P(0, 0), P(1, 0)), Segment(P(2, 0), P(3, 0)))
        assert hit.kind is IntersectionKind.EMPTY and not hit

    def test_overlap(self):
        hit = segments_intersect(Segment(P(0, 0), P(2, 0)), Segment(P(1, 0), P(3, 0)))
        assert hit.kind is IntersectionKind.SEGMENT
        assert {hit.segment.a, hit.segment.b} == {P(1, 0), P(2, 0)}

    def test_touching_endpoint(self):
        hit = segments_intersect(Segment(P(0, 0), P(1, 1)), Segment(P(1, 1), P(2, 0)))
        assert hit.kind is IntersectionKind.POINT and hit.point == P(1, 1)

    def test_rational_point(self):
        hit = segments_intersect(Segment(P(0, 0), P(1, 3)), Segment(P(0, 1), P(1, 0)))
        assert hit.point == P(Fraction(1, 4), Fraction(3, 4))

    def test_degenerate_segment_needs_flag(self):
        with pytest.raises(ValueError):
            Segment(P(1, 1), P(1, 1))
        assert Segment(P(1, 1), P(1, 1), degenerate=True).contains(P(1, 1))


class TestSimplicity:
    def test_examples(self):
        assert is_simple([(0, 0), (4, 0), (4, 4), (0, 4)])
        assert not is_simple([(0, 0), (2, 2), (2, 0), (0, 2)])
        assert is_simple(L_VERTS)

    def test_too_few_vertices(self):
        with pytest.raises(ValueError):
            is_simple([(0, 0), (1, 0)])

    def test_clockwise_rejected(self):
        assert not is_simple(list(reversed(L_VERTS)))
        assert "clockwise" in simplicity_violation(list(reversed(L_VERTS)))

    def test_repeated_vertex_and_spike(self):
        assert not is_simple([(0, 0), (2, 0), (2, 2), (2, 0), (0, 2)])
        assert not is_simple([(0, 0), (2, 0), (3, 0), (1, 0), (1, 2)])

    def test_vertex_touching_edge(self):
        # vertex (2, 0) of the notch lies on the bottom edge
        assert not is_simple([(0, 0), (4, 0), (4, 4), (2, 0), (0, 4)])

    def test_polygon_constructor_validates(self):
        with pytest.raises(NotSimpleError):
            SimplePolygon([(0, 0), (2, 2), (2, 0), (0, 2)])

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 200), st.integers(0, 30))
    def test_rotation_invariant(self, seed, shift):
        verts = list(random_simple_polygon(seed).vertices)
        s = shift % len(verts)
        assert is_simple(verts[s:] + verts[:s])

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 500))
    def test_reflex_count_bound(self, seed):
        poly = random_simple_polygon(seed)
        assert len(reflex_vertices(poly)) <= poly.n - 3


class TestContains:
    def test_square(self, sq):
        assert contains_point(sq, (2, 2)) is Location.INTERIOR
        assert contains_point(sq, (4, 2)) is Location.BOUNDARY
        assert contains_point(sq, (5, 5)) is Location.EXTERIOR

    def test_l_shape_notch(self, L):
        assert contains_point(L, (Fraction(3, 2), Fraction(3, 2))) is Location.EXTERIOR
        assert contains_point(L, (1, Fraction(3, 2))) is Location.BOUNDARY
        assert contains_point(L, (1, 1)) is Location.BOUNDARY
        # ray through a vertex must not double count
        assert contains_point(L, (Fraction(1, 2), 1)) is Location.INTERIOR

    def test_against_triangle_fan(self):
        # a convex polygon: interior iff strictly left of every edge
        poly = SimplePolygon([(0, 0), (6, 1), (7, 5), (2, 6), (-1, 3)])
        for x in range(-2, 9):
            for y in range(-2, 8):
                p = P(x, y)
                sides = [orientation(a, b, p) for a, b in poly.edges]
                if all(s is Orientation.LEFT for s in sides):
                    want = Location.INTERIOR
                elif any(s is Orientation.RIGHT for s in sides):
                    want = Location.EXTERIOR
                else:
                    want = Location.BOUNDARY
                assert contains_point(poly, p) is want


class TestReflexAndChords:
    def test_reflex_examples(self, sq, L, combs):
        assert reflex_vertices(sq) == []
        # (1,1) is the only vertex with a right turn
        assert reflex_vertices(L) == [P(1, 1)]
        assert len(reflex_vertices(combs[2].polygon)) == 6

    def test_straight_vertex_not_reflex(self):
        poly = SimplePolygon([(0, 0), (2, 0), (4, 0), (4, 4), (0, 4)])
        assert reflex_vertices(poly) == []

    def test_make_chord_examples(self, L, sq):
        c = make_chord(L, (0, 0), (0, 2))
        assert (c.a, c.b) == (P(0, 0), P(0, 2))
        with pytest.raises(SegmentLeavesPolygon):
            make_chord(L, (2, 0), (1, 2))
        with pytest.raises(EndpointNotOnBoundary):
            make_chord(sq, (1, 1), (3, 3))

    def test_grazing_diagonal_is_a_chord(self, L):
        c = make_chord(L, (2, 0), (0, 2))  # touches the reflex vertex
        assert c.segment.contains(P(1, 1))

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 300))
    def test_every_edge_is_a_chord(self, seed):
        poly = random_simple_polygon(seed)
        for a, b in poly.edges:
            make_chord(poly, a, b)
