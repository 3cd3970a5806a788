"""Command-line interface.

Exit codes: 0 success, 1 a checked invariant failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .checks import SUITES, run_suite
from .comb import generate_comb
from .errors import InputError, InternalError
from .geometry import make_chord
from .io import dumps, load_polygon, parse_chord_arg, parse_point, save_polygon
from .randpoly import corpus, random_simple_polygon
from .render import RenderSpec, render_svg
from .restriction import all_passed, build_restriction_graph, check_graph_properties
from .visibility import chord_interval, visibility_polygon, weak_visibility
from .widths import cvw, pvw, reflex_depth

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _default_seed() -> int:
    env = os.environ.get("VISWIDTH_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise InputError(f"VISWIDTH_SEED must be an integer, got {env!r}") from None


def _write(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _fmt_point(p) -> str:
    return f"({p.x}, {p.y})"


def cmd_gen(args) -> int:
    if args.kind == "comb":
        if args.layers is None or args.layers < 1:
            raise InputError("gen comb needs --layers K with K >= 1")
        comb = generate_comb(args.layers)
        save_polygon(comb.polygon, args.output)
        sidecar = args.sidecar or str(Path(args.output).with_suffix("")) + ".spikes.json"
        Path(sidecar).write_text(comb.sidecar_json() + "\n")
    elif args.kind == "random":
        save_polygon(random_simple_polygon(args.seed, args.n), args.output)
    else:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        for name, poly in corpus():
            save_polygon(poly, out / f"{name}.json")
    return EXIT_OK


def cmd_pvw(args) -> int:
    res = pvw(load_polygon(args.file))
    if args.json:
        _write(dumps(res.to_json("pvw")), None)
    else:
        print(res.value)
        print(f"witness {_fmt_point(res.witness)}")
    return EXIT_OK


def cmd_cvw(args) -> int:
    poly = load_polygon(args.file)
    res = cvw(poly, args.mode, sample_count=args.samples, seed=args.seed)
    if args.json:
        _write(dumps(res.to_json("cvw")), None)
    else:
        print(res.value)
        w = res.witness
        if w is not None:
            print(f"witness {_fmt_point(w.a)} - {_fmt_point(w.b)}")
        print(f"method {res.method.value}")
    return EXIT_OK


def cmd_reflex(args) -> int:
    poly = load_polygon(args.file)
    refl = poly.reflex_vertices
    print(len(refl))
    for r in refl:
        print(f"{r.x} {r.y}")
    return EXIT_OK


def cmd_depth(args) -> int:
    poly = load_polygon(args.file)
    print(reflex_depth(poly, parse_point(args.point)))
    return EXIT_OK


def cmd_visgraph(args) -> int:
    poly = load_polygon(args.file)
    a, b = parse_chord_arg(args.chord)
    g = build_restriction_graph(poly, make_chord(poly, a, b))
    text = dumps(g.to_json())
    if args.output:
        _write(text, args.output)
    elif args.check is None:
        _write(text, None)
    if args.check is not None:
        report = check_graph_properties(g, args.check)
        for pc in report:
            print(pc.line())
        return EXIT_OK if all_passed(report) else EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = True
    for path in args.files:
        poly = load_polygon(path)
        for chk in run_suite(args.suite, poly, args.seed):
            ok &= chk.passed
            print(f"{path}: {chk.line()}")
    print("all checks passed" if ok else "some checks FAILED")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(args) -> int:
    poly = load_polygon(args.file)
    spec = RenderSpec(poly, size=args.size)
    if args.vis_point:
        p = parse_point(args.vis_point)
        spec.viewpoint = p
        spec.region = visibility_polygon(poly, p)
    if args.vis_chord:
        c = make_chord(poly, *parse_chord_arg(args.vis_chord))
        spec.chord = c
        spec.region = weak_visibility(poly, c)
        spec.intervals = [iv for r in poly.reflex_vertices if (iv := chord_interval(poly, c, r))]
    if args.graph:
        c = make_chord(poly, *parse_chord_arg(args.graph))
        spec.chord = c
        spec.graph = build_restriction_graph(poly, c)
    if args.witness:
        res = pvw(poly)
        spec.annotations.append((res.witness, f"pvw={res.value}"))
    _write(render_svg(spec), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    seed = argparse.ArgumentParser(add_help=False)
    seed.add_argument("--seed", type=int, default=None, help="random seed (default: $VISWIDTH_SEED or 0)")

    p = argparse.ArgumentParser(prog="viswidth", description="Point and chord visibility width of simple polygons.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[seed], help="generate polygons")
    g.add_argument("kind", choices=["comb", "random", "corpus"])
    g.add_argument("--layers", type=int)
    g.add_argument("--n", type=int, default=None, help="vertex count for random polygons")
    g.add_argument("-o", "--output", required=True, help="output file (directory for corpus)")
    g.add_argument("--sidecar", help="where to write the comb's spike tree")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("pvw", help="point visibility width")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_pvw)

    s = sub.add_parser("cvw", parents=[seed], help="chord visibility width")
    s.add_argument("file")
    s.add_argument("--mode", choices=["certified", "sampled"], default="certified")
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cvw)

    s = sub.add_parser("reflex", help="list reflex vertices")
    s.add_argument("file")
    s.set_defaults(func=cmd_reflex)

    s = sub.add_parser("depth", help="reflex vertices seen from a point")
    s.add_argument("file")
    s.add_argument("point", help="X,Y")
    s.set_defaults(func=cmd_depth)

    s = sub.add_parser("visgraph", help="restriction graph of a chord")
    s.add_argument("file")
    s.add_argument("--chord", required=True, help="AX,AY:BX,BY")
    s.add_argument("-o", "--output")
    s.add_argument("--check", type=int, metavar="K", help="check the graph properties for width K")
    s.set_defaults(func=cmd_visgraph)

    s = sub.add_parser("verify", parents=[seed], help="run invariant suites")
    s.add_argument("files", nargs="+")
    s.add_argument("--suite", choices=sorted(SUITES), default="all")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", help="draw a polygon and overlays as SVG")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--size", type=int, default=600)
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--vis-point", metavar="X,Y")
    grp.add_argument("--vis-chord", metavar="AX,AY:BX,BY")
    grp.add_argument("--graph", metavar="AX,AY:BX,BY")
    s.add_argument("--witness", action="store_true", help="mark the pvw witness")
    s.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalError as exc:
        print(f"invariant failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
