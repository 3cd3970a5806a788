import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from viswidth import (
    InvalidChord,
    Location,
    Method,
    Point,
    chord_reflex_count,
    comb_expected_widths,
    cvw,
    make_chord,
    pvw,
    reflex_depth,
    restriction_size_bound,
    sees,
)
from viswidth.geometry import Chord
from viswidth.randpoly import random_point_in, random_simple_polygon
from viswidth.widths import (
    extend_chord,
    maximal_chords_on_line,
    pvw_candidates,
    random_chord,
)

F = Fraction


def grid_points(poly, steps):
    x0, y0, x1, y1 = poly.bbox()
    for i in range(steps + 1):
        for j in range(steps + 1):
            p = Point(x0 + (x1 - x0) * F(i, steps), y0 + (y1 - y0) * F(j, steps))
            if poly.locate(p)[0] is not Location.EXTERIOR:
                yield p


class TestPointWidth:
    def test_square(self, sq):
        res = pvw(sq)
        assert res.value == 0 and res.method is Method.EXACT_EVENT_POINTS
        assert res.witness == Point(0, 0)

    def test_l_shape(self, L):
        assert pvw(L).value == 1
        assert max(reflex_depth(L, p) for p in grid_points(L, 20)) == 1

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_combs(self, combs, k):
        res = pvw(combs[k].polygon)
        assert res.value == comb_expected_widths(k)[0] == 2 * k
        assert reflex_depth(combs[k].polygon, res.witness) == res.value

    def test_comb_top_chord_point(self, combs):
        comb = combs[2]
        top = comb.chord.b if comb.chord.b.y > comb.chord.a.y else comb.chord.a
        assert reflex_depth(comb.polygon, top) == 4

    def test_witness_is_least_maximizer(self, random_polys):
        for poly in random_polys[:15]:
            res = pvw(poly)
            cands = pvw_candidates(poly)
            depths = [reflex_depth(poly, p) for p in cands]
            assert max(depths) == res.value
            assert res.witness == min(p for p, d in zip(cands, depths) if d == res.value)

    def test_grid_never_beats_candidates(self, random_polys):
        for poly in random_polys[:12]:
            best = pvw(poly).value
            assert max(reflex_depth(poly, p) for p in grid_points(poly, 12)) <= best

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 300), st.integers(0, 10**6))
    def test_random_points_bounded(self, seed, salt):
        poly = random_simple_polygon(seed)
        rng = random.Random(salt)
        best = pvw(poly).value
        for _ in range(20):
            assert reflex_depth(poly, random_point_in(poly, rng)) <= best

    def test_monotone_comb_chord_attains_width(self, combs):
        comb = combs[3]
        best = pvw(comb.polygon).value
        depths = [reflex_depth(comb.polygon, comb.chord.point_at(F(i, 999))) for i in range(1000)]
        assert max(depths) == best


class TestChordCount:
    def test_examples(self, sq, L, L_left):
        assert chord_reflex_count(sq, make_chord(sq, (0, 0), (4, 4))) == 0
        assert chord_reflex_count(L, L_left) == 1
        assert chord_reflex_count(L, make_chord(L, (1, 2), (0, 2))) == 1

    def test_rejects_non_chord(self, L):
        with pytest.raises(InvalidChord):
            chord_reflex_count(L, ((0, 0), (0, 2)))

    def test_matches_oracle(self, random_polys):
        rng = random.Random(8)
        for poly in random_polys[:20]:
            c = random_chord(poly, rng)
            want = 0
            for r in poly.reflex_vertices:
                if any(sees(poly, r, c.point_at(F(i, 200))) for i in range(201)):
                    want += 1
            # sampling can only undercount
            assert chord_reflex_count(poly, c) >= want

    def test_at_least_short_circuit(self, combs):
        poly = combs[2].polygon
        c = combs[2].chord
        full = chord_reflex_count(poly, c)
        assert chord_reflex_count(poly, c, at_least=full) == full
        assert chord_reflex_count(poly, c, at_least=full + 1) <= full


class TestChordWidth:
    def test_square(self, sq):
        assert cvw(sq).value == 0

    def test_l_shape(self, L):
        res = cvw(L)
        assert res.value == 1 and res.method is Method.CANDIDATE_CERTIFIED

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_combs(self, combs, k):
        comb = combs[k]
        res = cvw(comb.polygon)
        assert res.value == comb_expected_widths(k)[1]
        assert {res.witness.a, res.witness.b} == {comb.chord.a, comb.chord.b}

    def test_witness_recount(self, random_polys):
        for poly in random_polys[:15]:
            res = cvw(poly)
            assert chord_reflex_count(poly, res.witness) == res.value

    def test_sampled_is_lower_bound(self, random_polys):
        for poly in random_polys[:6]:
            exact = cvw(poly).value
            low = cvw(poly, "sampled", 300, seed=4)
            assert low.method is Method.SAMPLED_LOWER_BOUND
            assert low.value <= exact

    def test_sampled_deterministic(self, L):
        a = cvw(L, "sampled", 200, seed=9)
        b = cvw(L, "sampled", 200, seed=9)
        assert a == b

    def test_line_cap_downgrades(self, random_polys):
        res = cvw(random_polys[10], line_cap=1, sample_count=50)
        assert res.method is Method.SAMPLED_LOWER_BOUND

    def test_bad_mode(self, sq):
        with pytest.raises(ValueError):
            cvw(sq, "guess")
        with pytest.raises(ValueError):
            cvw(sq, "sampled", 0)

    def test_pvw_at_most_cvw(self, random_polys):
        for poly in random_polys[:15]:
            assert pvw(poly).value <= cvw(poly).value

    def test_count_within_restriction_bound(self, random_polys):
        for poly in random_polys[:15]:
            k = pvw(poly).value
            assert cvw(poly).value + 2 <= restriction_size_bound(k)


class TestChordHelpers:
    def test_maximal_chords_through_notch(self, L):
        chords = maximal_chords_on_line(L, Point(0, F(3, 2)), Point(1, F(3, 2)))
        assert [(c.a, c.b) for c in chords] == [(Point(0, F(3, 2)), Point(1, F(3, 2)))]
        # the grazing diagonal is a single chord through the reflex vertex
        chords = maximal_chords_on_line(L, Point(2, 0), Point(1, 1))
        assert [{c.a, c.b} for c in chords] == [{Point(2, 0), Point(0, 2)}]

    def test_extend(self, L):
        c = Chord(L, Point(F(1, 4), F(1, 2)), Point(F(1, 2), F(1, 2)))
        ext = extend_chord(L, c)
        assert {ext.a, ext.b} == {Point(0, F(1, 2)), Point(2, F(1, 2))}


class TestSizeBound:
    @pytest.mark.parametrize("k,want", [(0, 2), (1, 4), (2, 14), (3, 80)])
    def test_values(self, k, want):
        assert restriction_size_bound(k) == want

    def test_negative(self):
        with pytest.raises(ValueError):
            restriction_size_bound(-1)
