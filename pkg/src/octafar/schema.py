"""Builders for the machine-readable point/curve/limit-set payloads.

One schema serves both the HTTP service and the CLI --json output; the
UI renders these fields verbatim.  All polygons are closed (first vertex
repeated) and ordered counterclockwise.
"""

from __future__ import annotations

from . import dynamics, farmap, hexagon, unfolding
from .planar import SQRT3, cross
from .surface import (
    OctahedronModel,
    SurfacePoint,
    T_VERTICES,
    fold_to_fundamental,
    in_chart_triangle,
)

SCHEMA_VERSION = 1


class OffSurface(ValueError):
    """Input coordinates do not lie on the given face."""


def _round9(x: float) -> float:
    # Values pass through format_float later; keep raw floats here.
    return float(x)


def _pt(z: complex) -> list[float]:
    return [_round9(z.real), _round9(z.imag)]


def _surface_pt(sp: SurfacePoint) -> dict:
    return {"face": sp.face, "x": _round9(sp.z.real), "y": _round9(sp.z.imag)}


def _closed_ccw(poly) -> list[list[float]]:
    pts = list(poly)
    if len(pts) >= 3:
        area2 = sum(
            cross(pts[i] - pts[0], pts[(i + 1) % len(pts)] - pts[0])
            for i in range(len(pts))
        )
        if area2 < 0.0:
            pts.reverse()
    if pts and abs(pts[0] - pts[-1]) > 0.0:
        pts.append(pts[0])
    return [_pt(z) for z in pts]


def build_point_response(
    model: OctahedronModel,
    face: int,
    x: float,
    y: float,
    orbit_n: int | None = None,
    orbit_branch: str | None = None,
) -> dict:
    """Full farthest-point report for one surface point."""
    z = complex(x, y)
    if not 0 <= face <= 7:
        raise OffSurface(f"face {face} is not in 0..7")
    if not in_chart_triangle(z, 1e-9):
        raise OffSurface(f"({x}, {y}) is outside the chart triangle of face {face}")
    sp = SurfacePoint(face, z)
    t, sym = fold_to_fundamental(sp)
    result = farmap.farpoint_set(t)
    f_img = farmap.apply_f(t)
    f_points = list(f_img) if isinstance(f_img, tuple) else [f_img]

    region = result.region
    body = {
        "schema_version": SCHEMA_VERSION,
        "query": {"face": face, "x": _round9(x), "y": _round9(y)},
        "fundamental": {
            "x": _round9(t.real),
            "y": _round9(t.imag),
            "symmetry": {
                "face": sym.face,
                "rotation": sym.rotation,
                "reflect": sym.reflect,
            },
        },
        "region": region.value,
        "g_value": _round9(farmap.eval_g(t)),
        "f_image": [_pt(w) for w in f_points],
        "farthest": {
            "distance": _round9(result.distance),
            "points": [_surface_pt(q) for q in result.points],
            "chart_points": [_pt(w) for w in result.chart_points],
        },
    }
    if region is farmap.RegionClass.SHARP_VERTEX:
        body["hexagon"] = None
        body["voronoi_cells"] = None
        body["essential_vertices"] = None
    else:
        cells, essential = hexagon.voronoi(t)
        hexa = hexagon.hexagon(t)
        body["hexagon"] = _closed_ccw(hexa.vertices)
        body["voronoi_cells"] = [
            {"index": c.index, "polygon": _closed_ccw(c.polygon)} for c in cells
        ]
        body["essential_vertices"] = [
            {"label": ev.label, "x": _round9(ev.location.real), "y": _round9(ev.location.imag)}
            for ev in essential
        ]
    if orbit_n is not None:
        body["orbit"] = build_orbit_payload(t, orbit_n, branch=orbit_branch)
    return body


def build_orbit_payload(
    t: complex, n: int, tol: float = 1e-9, branch: str | None = None
) -> dict:
    if branch is None:
        orb = dynamics.orbit(t, max_iter=max(1, n), tol=tol)
    else:
        orb = dynamics.forced_orbit(t, branch, max_iter=max(1, n), tol=tol)
    payload = {
        "points": [_pt(z) for z in orb.points],
        "terminated_by": orb.terminated_by.value,
        "limit_distance_to_boundary": _round9(
            dynamics.limit_set_distance(orb.points[-1])
        ),
        "limit_fixed_point": None,
        "limit_multiplier": None,
    }
    if orb.terminated_by is dynamics.Termination.CONVERGED:
        side = dynamics.convergence_side(orb.points[-1])
        x0, mult = dynamics.boundary_fixed_point(orb.points[-1].imag, side)
        payload["limit_fixed_point"] = [_round9(x0), _round9(orb.points[-1].imag)]
        payload["limit_multiplier"] = _round9(mult)
    return payload


def build_curve_j_payload(samples: int) -> dict:
    if samples < 2:
        raise ValueError("need at least 2 samples")
    r = farmap.root_r()
    delta = (0.25 - r) * 1e-4
    xs = [r + (0.25 - delta - r) * i / (samples - 1) for i in range(samples)]
    return {
        "schema_version": SCHEMA_VERSION,
        "root_r": _round9(r),
        "points": [_pt(complex(x, farmap.curve_j(x))) for x in xs],
    }


def build_limit_set_payload() -> dict:
    """The omega-limit set in one face chart: the orbit of the two
    non-horizontal sides of T under the face's dihedral group."""
    c = T_VERTICES[0]
    v = T_VERTICES[1]
    m = T_VERTICES[2]
    rot = complex(-0.5, SQRT3 / 2.0)
    segments = []
    for k in range(3):
        w = rot**k
        # Face edge (orbit of the long side) and centroid-to-midpoint segment.
        segments.append({"kind": "edge", "a": _pt(w * v), "b": _pt(w * v * rot)})
        segments.append({"kind": "median", "a": _pt(w * c), "b": _pt(w * m)})
    return {
        "schema_version": SCHEMA_VERSION,
        "per_face": True,
        "segments": segments,
    }


def build_distance_payload(
    model: OctahedronModel, f1: int, x1: float, y1: float,
    f2: int, x2: float, y2: float,
) -> dict:
    for f, x, y in ((f1, x1, y1), (f2, x2, y2)):
        if not 0 <= f <= 7:
            raise OffSurface(f"face {f} is not in 0..7")
        if not in_chart_triangle(complex(x, y), 1e-9):
            raise OffSurface(f"({x}, {y}) is outside the chart triangle of face {f}")
    d = unfolding.geodesic_distance(
        model, SurfacePoint(f1, complex(x1, y1)), SurfacePoint(f2, complex(x2, y2))
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "a": {"face": f1, "x": _round9(x1), "y": _round9(y1)},
        "b": {"face": f2, "x": _round9(x2), "y": _round9(y2)},
        "distance": _round9(d),
    }
