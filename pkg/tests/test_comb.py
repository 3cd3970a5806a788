import json
from fractions import Fraction

import pytest

from viswidth import (
    Point,
    StretchSearchDiverged,
    build_comb,
    certify_spike_isolation,
    comb_expected_widths,
    cvw,
    generate_comb,
    pvw,
    sees,
    zero_stretch_comb,
)
from viswidth import comb as comb_mod
from viswidth.comb import is_y_monotone

F = Fraction

COMB2 = [
    (0, 0), (3, 0), (3, 8), (2, 8), (2, 12), (3, 12), (3, 20), (1, 20),
    (1, 45), (3, 45), (3, 53), (2, 53), (2, 57), (3, 57), (3, 65), (0, 65),
]


class TestShape:
    def test_comb2_vertices(self, combs):
        assert list(combs[2].polygon.vertices) == [Point(x, y) for x, y in COMB2]
        assert combs[2].stretch_factors == (4, 1)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_reflex_per_layer(self, combs, k):
        comb = combs[k]
        layers = comb.reflex_by_layer()
        assert [len(layers[i]) for i in range(1, k + 1)] == [2**i for i in range(1, k + 1)]
        assert sorted(sum(layers.values(), [])) == sorted(comb.polygon.reflex_vertices)
        assert comb.polygon.n == 2 ** (k + 2)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_monotone_and_chord(self, combs, k):
        comb = combs[k]
        assert is_y_monotone(comb.polygon)
        assert comb.chord.a == Point(0, 0) and comb.chord.a.x == comb.chord.b.x == 0

    def test_not_monotone(self):
        from viswidth import SimplePolygon

        assert not is_y_monotone(SimplePolygon([(0, 0), (4, 0), (4, 4), (2, 1), (0, 4)]))

    def test_bad_layers(self):
        for bad in (0, -1):
            with pytest.raises(ValueError):
                generate_comb(bad)
            with pytest.raises(ValueError):
                comb_expected_widths(bad)
        with pytest.raises(ValueError):
            build_comb(2, [1])


class TestCertification:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_generated_combs_certify(self, combs, k):
        reports = certify_spike_isolation(combs[k])
        assert [r.layer for r in reports] == list(range(1, k + 1))
        assert all(r.passed for r in reports), [r.describe() for r in reports]

    @pytest.mark.parametrize("k", [2, 3])
    def test_isolation_by_sampling(self, combs, k):
        comb = combs[k]
        layers = comb.reflex_by_layer()
        for i in range(1, k + 1):
            spikes = [s for s in comb.spikes_at(i - 1) if s.corners]
            for j in range(101):
                q = comb.chord.point_at(F(j, 100))
                hit = [any(sees(comb.polygon, q, c) for c in s.corners) for s in spikes]
                assert sum(hit) <= 1, (i, q)
            assert sum(len(s.corners) for s in spikes) == len(layers[i])

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_zero_stretch_fails(self, k):
        reports = certify_spike_isolation(zero_stretch_comb(k))
        assert not all(r.passed for r in reports)
        first = next(r for r in reports if not r.passed)
        assert "FAIL" in first.describe()

    def test_zero_stretch_k2_violation(self):
        r = certify_spike_isolation(zero_stretch_comb(2))
        assert not r[0].passed and r[1].passed
        assert {Point(*p).x for p in r[0].violation} == {2}

    def test_stretch_search_diverges(self, monkeypatch):
        monkeypatch.setattr(comb_mod, "MAX_DOUBLINGS", 0)
        with pytest.raises(StretchSearchDiverged):
            generate_comb(2)

    def test_deterministic(self):
        assert generate_comb(3).polygon.vertices == generate_comb(3).polygon.vertices
        assert generate_comb(3).stretch_factors == (8, 16, 1)


class TestWidths:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_expected(self, combs, k):
        want_p, want_c = comb_expected_widths(k)
        assert (want_p, want_c) == (2 * k, 2 ** (k + 1) - 2)
        assert pvw(combs[k].polygon).value == want_p
        assert cvw(combs[k].polygon).value == want_c

    def test_ratio_grows(self, combs):
        ratios = [F(*comb_expected_widths(k)[::-1]) for k in range(1, 5)]
        assert ratios == sorted(ratios) and ratios[-1] > 3


class TestSidecar:
    def test_json(self, combs):
        comb = combs[2]
        data = json.loads(comb.sidecar_json())
        assert data["k"] == 2
        assert data["stretch_factors"] == ["4", "1"]
        assert data["chord"] == comb.chord.to_json()
        root = data["spikes"]
        assert root["layer"] == 0 and len(root["children"]) == 2
        assert root["corners"] == [Point(1, 20).to_json(), Point(1, 45).to_json()]
        leaves = root["children"][0]["children"]
        assert all(leaf["corners"] is None and leaf["children"] == [] for leaf in leaves)

    def test_sidecar_is_stable(self, combs):
        assert combs[3].sidecar_json() == generate_comb(3).sidecar_json()
