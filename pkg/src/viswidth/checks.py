"""Invariant suites shared by the ``verify`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .geometry import Location, SimplePolygon, segment_inside
from .randpoly import random_point_in
from .restriction import build_restriction_graph, check_graph_properties
from .visibility import visibility_map
from .widths import (
    _fast_depth,
    chord_reflex_count,
    cvw,
    pvw,
    random_chord,
    reflex_depth,
    restriction_size_bound,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f" ({self.detail})" if self.detail else "")


def widths_suite(poly: SimplePolygon, rng: random.Random, points: int = 200, samples: int = 500) -> list:
    out = []
    pw = pvw(poly)
    cw = cvw(poly, "certified", sample_count=samples, seed=rng.randrange(1 << 30))
    sw = cvw(poly, "sampled", sample_count=samples, seed=rng.randrange(1 << 30))
    out.append(Check("pvw <= cvw", pw.value <= cw.value, f"{pw.value} <= {cw.value}"))
    out.append(Check("sampled <= certified", sw.value <= cw.value, f"{sw.value} <= {cw.value}"))
    recount = reflex_depth(poly, pw.witness)
    out.append(Check("pvw witness recount", recount == pw.value, f"{recount} at {pw.witness}"))
    if cw.witness is not None:
        recount = chord_reflex_count(poly, cw.witness)
        out.append(Check("cvw witness recount", recount == cw.value, str(recount)))
    worst = max((_fast_depth(poly, random_point_in(poly, rng)) for _ in range(points)), default=0)
    out.append(Check("pvw >= sampled depth", worst <= pw.value, f"max sampled depth {worst}"))
    bound = restriction_size_bound(pw.value)
    over = 0
    for _ in range(max(1, points // 10)):
        c = random_chord(poly, rng)
        if c is not None and chord_reflex_count(poly, c) + 2 > bound:
            over += 1
    out.append(Check("chord count + 2 <= size bound", over == 0, f"bound {bound}"))
    return out


def graph_suite(poly: SimplePolygon, rng: random.Random, chords: int = 20, k=None) -> list:
    if k is None:
        k = pvw(poly).value
    failures = {}
    built = 0
    for _ in range(chords):
        c = random_chord(poly, rng)
        if c is None:
            continue
        built += 1
        for pc in check_graph_properties(build_restriction_graph(poly, c), k):
            if not pc.passed:
                failures.setdefault(pc.name, pc.detail)
    if not failures:
        return [Check("restriction graph properties", True, f"{built} chords, k={k}")]
    return [Check(f"graph {name}", False, detail) for name, detail in sorted(failures.items())]


def visibility_suite(poly: SimplePolygon, rng: random.Random, views: int = 3, points: int = 100) -> list:
    bad = 0
    for _ in range(views):
        p = random_point_in(poly, rng)
        region = visibility_map(poly, p).region()
        for _ in range(points):
            x = random_point_in(poly, rng)
            if region.contains(x) != segment_inside(poly, p, x):
                bad += 1
    return [Check("visibility region = sees()", bad == 0, f"{bad} disagreements")]


SUITES = {
    "widths": (widths_suite,),
    "graph": (graph_suite,),
    "visibility": (visibility_suite,),
    "all": (visibility_suite, widths_suite, graph_suite),
}


def run_suite(name: str, poly: SimplePolygon, seed: int) -> list:
    rng = random.Random(seed)
    out = []
    for fn in SUITES[name]:
        out.extend(fn(poly, rng))
    return out
