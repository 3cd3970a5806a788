"""Visibility restriction graph of a chord.

Nodes are the chord endpoints plus every reflex vertex that sees part of
the chord.  Each reflex node ``r`` has two out-edges, to the points that
restrict the two ends of its interval ``I(r)``; an edge ``u -> v`` means
``u`` is restricted by ``v`` and implies ``I(u)`` is contained in ``I(v)``.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import CyclicGraph, NestingViolation, RestrictorOutsideR
from .geometry import Chord, Point, SimplePolygon
from .visibility import ChordInterval, chord_interval, sees, _check_chord
from .widths import restriction_size_bound


class NodeKind(enum.Enum):
    ENDPOINT = "Endpoint"
    REFLEX = "Reflex"


@dataclass(frozen=True)
class Node:
    id: int
    point: Point
    kind: NodeKind
    interval: Optional[ChordInterval]  # None means the full chord

    @property
    def lo(self) -> Fraction:
        return Fraction(0) if self.interval is None else self.interval.lo

    @property
    def hi(self) -> Fraction:
        return Fraction(1) if self.interval is None else self.interval.hi

    @property
    def is_reflex_vertex(self) -> bool:
        return self.kind is NodeKind.REFLEX


@dataclass
class RestrictionGraph:
    polygon: SimplePolygon
    chord: Chord
    nodes: list
    edges: list  # (u_id, v_id), one per restrictor, so doubled edges appear twice
    layers: list = field(default_factory=list)

    def __post_init__(self):
        self.by_point = {nd.point: nd for nd in self.nodes}
        self.out = {nd.id: [] for nd in self.nodes}
        self.inn = {nd.id: [] for nd in self.nodes}
        for u, v in self.edges:
            self.out[u].append(v)
            self.inn[v].append(u)

    def node(self, key) -> Node:
        if isinstance(key, Node):
            return key
        if isinstance(key, int):
            return self.nodes[key]
        return self.by_point[key]

    def layer_of(self) -> dict:
        return {i: li for li, layer in enumerate(self.layers) for i in layer}

    def to_json(self) -> dict:
        layer = self.layer_of()
        return {
            "chord": self.chord.to_json(),
            "nodes": [
                {
                    "id": nd.id,
                    "point": nd.point.to_json(),
                    "kind": nd.kind.value,
                    "interval": [str(nd.lo), str(nd.hi)],
                    "layer": layer.get(nd.id),
                }
                for nd in self.nodes
            ],
            "edges": [[u, v] for u, v in self.edges],
            "layers": [sorted(l) for l in self.layers],
        }


def visible_reflex_set(poly: SimplePolygon, c: Chord) -> list:
    """Chord endpoints, then reflex vertices seeing the chord, in ring order."""
    _check_chord(poly, c)
    out = [c.a, c.b]
    for i in poly.reflex_indices:
        r = poly.vertices[i]
        if r in (c.a, c.b):
            continue
        if chord_interval(poly, c, r) is not None:
            out.append(r)
    return out


def build_restriction_graph(poly: SimplePolygon, c: Chord) -> RestrictionGraph:
    _check_chord(poly, c)
    nodes = [
        Node(0, c.a, NodeKind.ENDPOINT, None),
        Node(1, c.b, NodeKind.ENDPOINT, None),
    ]
    for i in poly.reflex_indices:
        r = poly.vertices[i]
        if r in (c.a, c.b):
            continue
        ci = chord_interval(poly, c, r)
        if ci is not None:
            nodes.append(Node(len(nodes), r, NodeKind.REFLEX, ci))
    ids = {nd.point: nd.id for nd in nodes}
    edges = []
    for nd in nodes:
        if nd.kind is NodeKind.ENDPOINT:
            continue
        for target in (nd.interval.lo_restrictor, nd.interval.hi_restrictor):
            if target not in ids:
                raise RestrictorOutsideR(f"{nd.point!r} is restricted by {target!r}, which is not in R")
            edges.append((nd.id, ids[target]))
    g = RestrictionGraph(poly, c, nodes, edges)
    g.layers = _layers(g)
    return g


def _layers(g: RestrictionGraph) -> list:
    """Breadth-first layers by distance to the nearer endpoint, along reversed edges."""
    dist = {0: 0, 1: 0}
    queue = deque([0, 1])
    while queue:
        v = queue.popleft()
        for u in sorted(set(g.inn[v])):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    if not dist:
        return []
    layers = [[] for _ in range(max(dist.values()) + 1)]
    for v in sorted(dist):
        layers[dist[v]].append(v)
    return layers


@dataclass(frozen=True)
class PropertyCheck:
    name: str
    passed: bool
    detail: str = ""
    counterexample: object = None

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


def longest_path(g: RestrictionGraph) -> list:
    """A longest directed path (as node ids); raises CyclicGraph on a cycle."""
    indeg = {nd.id: 0 for nd in g.nodes}
    for u, v in g.edges:
        indeg[v] += 1
    order = []
    queue = deque(sorted(i for i, d in indeg.items() if d == 0))
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in g.out[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if len(order) != len(g.nodes):
        stuck = sorted(i for i, d in indeg.items() if d > 0)
        raise CyclicGraph(f"restriction graph has a cycle through nodes {stuck}")
    best = {}
    nxt = {}
    for u in reversed(order):
        best[u], nxt[u] = 1, None
        for v in sorted(set(g.out[u])):
            if best[v] + 1 > best[u]:
                best[u], nxt[u] = best[v] + 1, v
    if not order:
        return []
    start = max(order, key=lambda i: (best[i], -i))
    path = [start]
    while nxt[path[-1]] is not None:
        path.append(nxt[path[-1]])
    return path


def check_graph_properties(g: RestrictionGraph, k: int, *, strict_endpoint_in_degree: bool = False) -> list:
    """Evaluate the structural properties of the graph for width ``k``.

    Returns a list of :class:`PropertyCheck`.  With
    ``strict_endpoint_in_degree`` the in-degree bound ``k - 1`` is applied
    to endpoints too.
    """
    # a reflex vertex sees itself and its in-neighbours, so it has at most
    # k - 1 of them; an endpoint that is not a reflex vertex may have k
    reflex = set(g.polygon.reflex_vertices)
    ids = [nd.id for nd in g.nodes]
    out = []

    sinks = sorted(i for i in ids if not g.out[i])
    out.append(
        PropertyCheck(
            "sinks",
            sinks == [0, 1],
            f"sinks {sinks}",
            None if sinks == [0, 1] else sinks,
        )
    )

    bad = [nd.id for nd in g.nodes if nd.kind is NodeKind.REFLEX and len(g.out[nd.id]) != 2]
    out.append(PropertyCheck("out_degree", not bad, f"{len(bad)} reflex nodes without two out-edges", bad or None))

    worst = None
    for nd in g.nodes:
        deg = len(set(g.inn[nd.id]))
        if nd.kind is NodeKind.REFLEX or strict_endpoint_in_degree or nd.point in reflex:
            bound = k - 1
        else:
            bound = k
        if deg > bound and worst is None:
            worst = (nd.id, deg, bound)
    detail = "max in-degree %d" % max((len(set(g.inn[i])) for i in ids), default=0)
    if worst:
        detail = f"node {worst[0]} has in-degree {worst[1]} > {worst[2]}"
    out.append(PropertyCheck("in_degree", worst is None, detail, worst))

    path = longest_path(g)
    ok = len(path) <= k + 1
    out.append(
        PropertyCheck(
            "longest_path",
            ok,
            f"longest path has {len(path)} vertices (limit {k + 1})",
            None if ok else path,
        )
    )

    bad_edge = None
    for u, v in g.edges:
        nu, nv = g.nodes[u], g.nodes[v]
        if not (nv.lo <= nu.lo and nu.hi <= nv.hi):
            bad_edge = (u, v)
            break
    out.append(
        PropertyCheck(
            "nesting",
            bad_edge is None,
            f"{len(g.edges)} edges" if bad_edge is None else f"I({u}) not inside I({v})",
            bad_edge,
        )
    )

    bound = restriction_size_bound(k)
    out.append(
        PropertyCheck(
            "size",
            len(g.nodes) <= bound,
            f"{len(g.nodes)} nodes (bound {bound})",
            None if len(g.nodes) <= bound else len(g.nodes),
        )
    )

    sizes = [len(l) for l in g.layers]
    growth = bool(sizes) and sizes[0] == 2 and all(b <= a * k for a, b in zip(sizes, sizes[1:]))
    growth = growth and sum(sizes) == len(g.nodes)
    out.append(PropertyCheck("layer_growth", growth, f"layer sizes {sizes}", None if growth else sizes))

    unseen = None
    for v in g.nodes:
        for u in set(g.inn[v.id]):
            if not sees(g.polygon, v.point, g.nodes[u].point):
                unseen = (u, v.id)
                break
        if unseen:
            break
    out.append(
        PropertyCheck(
            "in_neighbours_visible",
            unseen is None,
            "" if unseen is None else f"node {unseen[1]} does not see in-neighbour {unseen[0]}",
            unseen,
        )
    )
    return out


def all_passed(report: list) -> bool:
    return all(p.passed for p in report)


def path_visibility_witness(g: RestrictionGraph, path: list) -> Point:
    """A point of the first node's interval that sees every reflex node on the path."""
    nodes = [g.node(p) for p in path]
    if not nodes:
        raise ValueError("empty path")
    for u, v in zip(nodes, nodes[1:]):
        if v.id not in g.out[u.id]:
            raise ValueError(f"{u.id} -> {v.id} is not an edge")
    first = nodes[0]
    q = g.chord.point_at((first.lo + first.hi) / 2)
    for nd in nodes:
        if nd.kind is NodeKind.REFLEX and not sees(g.polygon, q, nd.point):
            raise NestingViolation(f"{q!r} does not see {nd.point!r} on the path")
    return q
