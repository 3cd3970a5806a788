"""The Iterated Comb: a polygon family whose chord width is exponential in
its point width.

Layout: spike layers advance one unit in x each.  The trunk ``[0,1] x
[0,H]`` opens on the left onto the vertical chord; at ``x = i`` every
layer-``(i-1)`` spike splits into two child spikes separated by a vertical
notch (the bridge).  The two notch corners are the reflex vertices of layer
``i``.  Leaves have height 1; a bridge at layer ``i`` has height
``h_i (1 + s_i) / 4`` where ``s_i`` is the layer's stretch factor.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Optional

from .errors import StretchSearchDiverged
from .geometry import Chord, Point, SimplePolygon, make_chord
from .visibility import chord_interval

MAX_DOUBLINGS = 64


@dataclass
class Spike:
    """One branch of the comb.

    ``corners`` holds the two reflex vertices of the notch that splits this
    spike (None for leaves); they lie in the spike's interior.
    """

    layer: int
    lo: Fraction
    hi: Fraction
    corners: Optional[tuple] = None
    children: list = field(default_factory=list)

    def walk(self):
        yield self
        for ch in self.children:
            yield from ch.walk()

    def to_json(self) -> dict:
        return {
            "layer": self.layer,
            "y_range": [str(self.lo), str(self.hi)],
            "corners": None if self.corners is None else [c.to_json() for c in self.corners],
            "children": [ch.to_json() for ch in self.children],
        }


@dataclass
class CombStructure:
    k: int
    polygon: SimplePolygon
    chord: Chord
    root: Spike
    stretch_factors: tuple

    def spikes_at(self, layer: int) -> list:
        return [s for s in self.root.walk() if s.layer == layer]

    def reflex_by_layer(self) -> dict:
        """Reflex vertices grouped by the layer they belong to (1..k)."""
        out = {i: [] for i in range(1, self.k + 1)}
        for s in self.root.walk():
            if s.corners is not None:
                out[s.layer + 1].extend(s.corners)
        return out

    def sidecar(self) -> dict:
        return {
            "k": self.k,
            "chord": self.chord.to_json(),
            "stretch_factors": [str(s) for s in self.stretch_factors],
            "spikes": self.root.to_json(),
        }

    def sidecar_json(self) -> str:
        return json.dumps(self.sidecar(), indent=2, sort_keys=True)


def _heights(k: int, stretch):
    """Spike heights h_0..h_k and bridge heights g_1..g_k (index 0 unused)."""
    h = [Fraction(0)] * (k + 1)
    g = [Fraction(0)] * (k + 1)
    h[k] = Fraction(1)
    for i in range(k, 0, -1):
        g[i] = h[i] * (1 + stretch[i - 1]) / 4
        h[i - 1] = 2 * h[i] + g[i]
    return h, g


def build_comb(k: int, stretch) -> CombStructure:
    """Comb with the given per-layer stretch factors (no certification)."""
    if k < 1:
        raise ValueError("a comb needs at least one layer")
    stretch = tuple(Fraction(s) for s in stretch)
    if len(stretch) != k:
        raise ValueError("need one stretch factor per layer")
    h, _ = _heights(k, stretch)
    denom = 1
    for v in h:
        denom = lcm(denom, v.denominator)

    def build(layer, lo, hi):
        sp = Spike(layer, lo * denom, hi * denom)
        if layer == k:
            return sp, [Point(k + 1, lo * denom), Point(k + 1, hi * denom)]
        c = h[layer + 1]
        low, lt = build(layer + 1, lo, lo + c)
        up, ut = build(layer + 1, hi - c, hi)
        inner = (Point(layer + 1, (lo + c) * denom), Point(layer + 1, (hi - c) * denom))
        sp.corners = inner
        sp.children = [low, up]
        return sp, lt + list(inner) + ut

    root, trace = build(0, Fraction(0), h[0])
    top = h[0] * denom
    verts = [Point(0, 0)] + trace + [Point(0, top)]
    poly = SimplePolygon(verts)
    chord = make_chord(poly, Point(0, 0), Point(0, top))
    return CombStructure(k, poly, chord, root, stretch)


@dataclass(frozen=True)
class LayerReport:
    layer: int
    passed: bool
    pairs_checked: int
    violation: Optional[tuple] = None

    def describe(self) -> str:
        if self.passed:
            return f"layer {self.layer}: pass ({self.pairs_checked} pairs)"
        u, v = self.violation
        return f"layer {self.layer}: FAIL, intervals of {u} and {v} overlap"


def _layer_report(comb: CombStructure, layer: int, cache: dict) -> LayerReport:
    poly, chord = comb.polygon, comb.chord

    def interval(r):
        if r not in cache:
            cache[r] = chord_interval(poly, chord, r)
        return cache[r]

    spikes = [s for s in comb.spikes_at(layer) if s.corners is not None]
    checked = 0
    for i, s1 in enumerate(spikes):
        for s2 in spikes[i + 1 :]:
            for u in s1.corners:
                for v in s2.corners:
                    checked += 1
                    iu, iv = interval(u), interval(v)
                    if iu is None or iv is None:
                        continue
                    if max(iu.lo, iv.lo) <= min(iu.hi, iv.hi):
                        return LayerReport(layer, False, checked, (u, v))
    return LayerReport(layer, True, checked)


def certify_spike_isolation(comb: CombStructure) -> list:
    """Per-layer check that no chord point sees interior vertices of two
    spikes of the same layer."""
    cache: dict = {}
    return [_layer_report(comb, i, cache) for i in range(1, comb.k + 1)]


def generate_comb(k: int) -> CombStructure:
    """Certified comb: bridges stretched from the innermost layer outward."""
    if k < 1:
        raise ValueError("a comb needs at least one layer")
    stretch = [Fraction(1)] * k
    for _ in range(k + 1):
        for layer in range(k, 0, -1):
            for _ in range(MAX_DOUBLINGS):
                comb = build_comb(k, stretch)
                if _layer_report(comb, layer, {}).passed:
                    break
                stretch[layer - 1] *= 2
            else:
                raise StretchSearchDiverged(f"layer {layer} never certified")
        comb = build_comb(k, stretch)
        if all(r.passed for r in certify_spike_isolation(comb)):
            return comb
    raise StretchSearchDiverged("stretching outer layers keeps breaking inner ones")


def zero_stretch_comb(k: int) -> CombStructure:
    """Negative control: every bridge at its minimum height."""
    return build_comb(k, [0] * k)


def comb_expected_widths(k: int) -> tuple:
    if k < 1:
        raise ValueError("a comb needs at least one layer")
    return 2 * k, 2 ** (k + 1) - 2


def is_y_monotone(poly: SimplePolygon) -> bool:
    """Does the ring split into two chains that are monotone in y?"""
    ys = [v.y for v in poly.vertices]
    n = len(ys)
    lo = min(range(n), key=lambda i: (ys[i], -i))
    hi = max(range(n), key=lambda i: (ys[i], i))

    def monotone(start, stop, step_sign):
        i = start
        while i != stop:
            j = (i + 1) % n
            if (ys[j] - ys[i]) * step_sign < 0:
                return False
            i = j
        return True

    return monotone(lo, hi, 1) and monotone(hi, lo, -1)
