"""Command-line interface: point queries, distances, orbits, Voronoi
reports, SVG figures, the verification suite, and the explorer service.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
All numeric output is printed with 9 significant digits.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, dynamics, farmap, hexagon, svgfig, unfolding, verify
from .jsonfmt import canonical_dumps, format_float as f9
from .schema import OffSurface, build_distance_payload, build_point_response
from .surface import SurfacePoint, build_model

_MODEL = None


def _model():
    global _MODEL
    if _MODEL is None:
        _MODEL = build_model()
    return _MODEL


def _fmt_pt(z: complex) -> str:
    return f"({f9(z.real)}, {f9(z.imag)})"


def _cmd_farpoint(args) -> int:
    try:
        body = build_point_response(_model(), args.face, args.x, args.y)
    except (OffSurface, farmap.NotInT) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.oracle is not None:
        value, maxers = unfolding.farthest_oracle(
            _model(), SurfacePoint(args.face, complex(args.x, args.y)), h=args.oracle
        )
        body["oracle"] = {
            "h": float(args.oracle),
            "value": float(value),
            "discrepancy": float(abs(value - body["farthest"]["distance"])),
            "maximizers": [
                {"face": sp.face, "x": sp.z.real, "y": sp.z.imag} for sp in maxers
            ],
        }
    if args.json:
        print(canonical_dumps(body))
        return 0
    t = body["fundamental"]
    sym = t["symmetry"]
    print(f"input: face {args.face}, {_fmt_pt(complex(args.x, args.y))}")
    print(
        f"fundamental: {_fmt_pt(complex(t['x'], t['y']))}  "
        f"[symmetry: face {sym['face']}, rotation {sym['rotation']}, "
        f"reflect {'yes' if sym['reflect'] else 'no'}]"
    )
    print(f"region: {body['region']}")
    print(f"G: {f9(body['g_value'])}")
    for w in body["f_image"]:
        print(f"f(p): {_fmt_pt(complex(*w))}")
    for q, c in zip(body["farthest"]["points"], body["farthest"]["chart_points"]):
        print(
            f"farthest point: face {q['face']}, {_fmt_pt(complex(q['x'], q['y']))}"
            f"   chart: {_fmt_pt(complex(*c))}"
        )
    print(f"distance: {f9(body['farthest']['distance'])}")
    if args.oracle is not None:
        o = body["oracle"]
        print(
            f"oracle (h={f9(o['h'])}): value {f9(o['value'])}, "
            f"discrepancy {f9(o['discrepancy'])}, "
            f"{len(o['maximizers'])} maximizer cluster(s)"
        )
    return 0


def _cmd_distance(args) -> int:
    try:
        body = build_distance_payload(
            _model(), args.face1, args.x1, args.y1, args.face2, args.x2, args.y2
        )
    except OffSurface as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(canonical_dumps(body))
    else:
        print(f"distance: {f9(body['distance'])}")
    return 0


def _cmd_orbit(args) -> int:
    p = complex(args.x, args.y)
    try:
        orb = dynamics.orbit(p, max_iter=args.n, tol=args.tol)
    except farmap.NotInT as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        body = {
            "start": [p.real, p.imag],
            "points": [[z.real, z.imag] for z in orb.points],
            "terminated_by": orb.terminated_by.value,
            "limit_distance_to_boundary": dynamics.limit_set_distance(orb.last),
        }
        print(canonical_dumps(body))
        return 0
    for i, z in enumerate(orb.points):
        print(f"{i:4d}  {f9(z.real)}  {f9(z.imag)}")
    print(f"terminated_by: {orb.terminated_by.value}")
    print(
        f"limit: {_fmt_pt(orb.last)}  distance to boundary "
        f"{f9(dynamics.limit_set_distance(orb.last))}"
    )
    return 0


def _cmd_voronoi(args) -> int:
    p = complex(args.x, args.y)
    try:
        cells, essential = hexagon.voronoi(p)
    except (hexagon.SharpVertexDegenerate, farmap.NotInT) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    hexa = hexagon.hexagon(p)
    if args.json:
        body = {
            "probe": [p.real, p.imag],
            "hexagon": [[v.real, v.imag] for v in hexa.vertices],
            "cells": [
                {"index": c.index, "polygon": [[z.real, z.imag] for z in c.polygon]}
                for c in cells
            ],
            "essential_vertices": [
                {"label": ev.label, "x": ev.location.real, "y": ev.location.imag}
                for ev in essential
            ],
        }
        print(canonical_dumps(body))
        return 0
    print("hexagon vertices:")
    for j, v in enumerate(hexa.vertices):
        print(f"  p{j} = {_fmt_pt(v)}")
    print("essential vertices:")
    for ev in essential:
        print(f"  ({ev.label}) at {_fmt_pt(ev.location)}")
    for c in cells:
        pts = " ".join(_fmt_pt(z) for z in c.polygon)
        print(f"cell {c.index}: {pts}")
    return 0


def _cmd_figure(args) -> int:
    params = {}
    for key in ("samples", "k_max"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if args.x is not None:
        params["x"] = args.x
    if args.y is not None:
        params["y"] = args.y
    spec = svgfig.FigureSpec(args.figure_id, params)
    try:
        content = svgfig.render(spec)
    except svgfig.UnknownFigure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(content)
    except OSError as exc:
        print(f"error writing {args.out}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}")
    return 0


def _cmd_verify(args) -> int:
    report = verify.run_all(quick=args.quick)
    if args.json:
        print(canonical_dumps(report.to_payload()))
    else:
        print(verify.format_report(report))
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(canonical_dumps(report.to_payload()))
            fh.write("\n")
    return 0 if report.passed else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static_dir)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="octafar",
        description="Farthest-point map on the regular octahedron",
    )
    parser.add_argument("--version", action="version", version=f"octafar {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("farpoint", help="classify a point and report its farthest set")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.add_argument("--face", type=int, default=0, help="face id (default 0)")
    p.add_argument("--oracle", type=float, metavar="H",
                   help="also run the brute-force oracle at grid spacing H")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_farpoint)

    p = sub.add_parser("distance", help="geodesic distance between two surface points")
    p.add_argument("face1", type=int)
    p.add_argument("x1", type=float)
    p.add_argument("y1", type=float)
    p.add_argument("face2", type=int)
    p.add_argument("x2", type=float)
    p.add_argument("y2", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_distance)

    p = sub.add_parser("orbit", help="iterate the farthest-point dynamics")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.add_argument("n", type=int, help="maximum number of iterations")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("voronoi", help="hexagon Voronoi report for a probe in T")
    p.add_argument("x", type=float)
    p.add_argument("y", type=float)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_voronoi)

    p = sub.add_parser("figure", help="emit a deterministic SVG figure")
    p.add_argument("figure_id", choices=list(svgfig.FIGURE_IDS) + ["list"],
                   metavar="FIGURE",
                   help=f"one of {', '.join(svgfig.FIGURE_IDS)}")
    p.add_argument("--out", default="figure.svg")
    p.add_argument("--samples", type=int)
    p.add_argument("--k-max", dest="k_max", type=int)
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--quick", action="store_true", help="reduced sample counts")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="also write the JSON report to a file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", help="run the explorer JSON service")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static-dir", default=None,
                   help="directory with the UI bundle to serve at /")
    p.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "figure_id", None) == "list":
        for fid in svgfig.FIGURE_IDS:
            print(fid)
        return 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
