import json
import random
from fractions import Fraction

import pytest

from viswidth import (
    CyclicGraph,
    InvalidChord,
    NestingViolation,
    Point,
    build_restriction_graph,
    check_graph_properties,
    make_chord,
    path_visibility_witness,
    pvw,
    sees,
    visible_reflex_set,
)
from viswidth.restriction import NodeKind, Node, RestrictionGraph, all_passed, longest_path
from viswidth.widths import extend_chord, random_chord

F = Fraction


def by_name(report):
    return {p.name: p for p in report}


class TestExamples:
    def test_l_shape(self, L, L_left):
        g = build_restriction_graph(L, L_left)
        assert [nd.point for nd in g.nodes] == [Point(0, 0), Point(0, 2), Point(1, 1)]
        assert g.edges == [(2, 0), (2, 1)]
        assert g.layers == [[0, 1], [2]]
        assert all_passed(check_graph_properties(g, 1))
        assert visible_reflex_set(L, L_left) == [Point(0, 0), Point(0, 2), Point(1, 1)]

    def test_square_has_only_endpoints(self, sq):
        g = build_restriction_graph(sq, make_chord(sq, (0, 0), (4, 4)))
        assert len(g.nodes) == 2 and g.edges == []
        assert all_passed(check_graph_properties(g, 0))

    def test_comb2(self, combs):
        comb = combs[2]
        g = build_restriction_graph(comb.polygon, comb.chord)
        assert len(g.nodes) == 8 and len(g.edges) == 12
        assert g.layers == [[0, 1], [2, 3, 4, 5, 6, 7]]
        report = by_name(check_graph_properties(g, 4))
        assert all(p.passed for p in report.values()), [p.line() for p in report.values()]

    def test_comb2_too_small_k(self, combs):
        comb = combs[2]
        g = build_restriction_graph(comb.polygon, comb.chord)
        report = by_name(check_graph_properties(g, 1))
        failed = {n for n, p in report.items() if not p.passed}
        assert {"in_degree", "longest_path", "size", "layer_growth"} <= failed
        assert len(report["longest_path"].counterexample) == 3

    def test_reflex_endpoint_is_not_duplicated(self, L):
        g = build_restriction_graph(L, make_chord(L, (1, 1), (1, 0)))
        assert [(nd.point, nd.kind) for nd in g.nodes] == [
            (Point(1, 1), NodeKind.ENDPOINT),
            (Point(1, 0), NodeKind.ENDPOINT),
        ]

    def test_foreign_chord(self, L, sq):
        with pytest.raises(InvalidChord):
            build_restriction_graph(L, make_chord(sq, (0, 0), (4, 0)))


class TestEndpointInDegree:
    def test_literal_reading_fails_on_l(self, L, L_left):
        g = build_restriction_graph(L, L_left)
        assert by_name(check_graph_properties(g, 1))["in_degree"].passed
        strict = by_name(check_graph_properties(g, 1, strict_endpoint_in_degree=True))
        assert not strict["in_degree"].passed
        assert strict["in_degree"].counterexample == (0, 1, 0)

    def test_literal_reading_fails_on_comb(self, combs):
        comb = combs[2]
        g = build_restriction_graph(comb.polygon, comb.chord)
        k = pvw(comb.polygon).value
        assert len(set(g.inn[0])) == k
        assert by_name(check_graph_properties(g, k))["in_degree"].passed
        strict = by_name(check_graph_properties(g, k, strict_endpoint_in_degree=True))
        assert not strict["in_degree"].passed


class TestProperties:
    def test_random_chords(self, random_polys):
        rng = random.Random(31)
        for poly in random_polys[:25]:
            k = pvw(poly).value
            for _ in range(6):
                c = random_chord(poly, rng)
                for chord in (c, extend_chord(poly, c)):
                    g = build_restriction_graph(poly, chord)
                    report = check_graph_properties(g, k)
                    assert all_passed(report), [p.line() for p in report if not p.passed]

    def test_edges_nest_intervals(self, random_polys):
        rng = random.Random(32)
        for poly in random_polys[:20]:
            g = build_restriction_graph(poly, random_chord(poly, rng))
            for u, v in g.edges:
                assert g.nodes[v].lo <= g.nodes[u].lo and g.nodes[u].hi <= g.nodes[v].hi

    def test_path_witness(self, random_polys):
        rng = random.Random(33)
        for poly in random_polys[:25]:
            g = build_restriction_graph(poly, random_chord(poly, rng))
            path = longest_path(g)
            q = path_visibility_witness(g, path)
            for i in path:
                if g.nodes[i].kind is NodeKind.REFLEX:
                    assert sees(poly, q, g.nodes[i].point)

    def test_path_witness_l(self, L, L_left):
        g = build_restriction_graph(L, L_left)
        assert longest_path(g) == [2, 0]
        q = path_visibility_witness(g, [2, 0])
        assert q == Point(0, 1)
        with pytest.raises(ValueError):
            path_visibility_witness(g, [0, 2])


class TestFailures:
    def _cyclic(self, L, L_left):
        base = build_restriction_graph(L, L_left)
        nodes = list(base.nodes) + [Node(3, Point(2, 0), NodeKind.REFLEX, base.nodes[2].interval)]
        return RestrictionGraph(L, L_left, nodes, [(2, 3), (3, 2), (2, 0), (3, 1)], [[0, 1]])

    def test_cycle_detected(self, L, L_left):
        g = self._cyclic(L, L_left)
        with pytest.raises(CyclicGraph):
            longest_path(g)
        with pytest.raises(CyclicGraph):
            check_graph_properties(g, 1)

    def test_nesting_violation(self, L):
        c = make_chord(L, (2, 0), (2, 1))
        base = build_restriction_graph(L, c)
        hidden = Point(F(1, 2), F(19, 10))
        assert not sees(L, c.point_at(F(1, 2)), hidden)
        fake = Node(2, hidden, NodeKind.REFLEX, base.nodes[2].interval)
        g = RestrictionGraph(L, c, [base.nodes[0], base.nodes[1], fake], [(2, 0), (2, 1)])
        with pytest.raises(NestingViolation):
            path_visibility_witness(g, [2, 0])


class TestExport:
    def test_json(self, combs):
        comb = combs[2]
        g = build_restriction_graph(comb.polygon, comb.chord)
        data = json.loads(json.dumps(g.to_json()))
        assert len(data["nodes"]) == 8 and len(data["edges"]) == 12
        assert data["nodes"][0]["kind"] == "Endpoint"
        assert {nd["layer"] for nd in data["nodes"]} == {0, 1}
        assert data["layers"] == [[0, 1], [2, 3, 4, 5, 6, 7]]
