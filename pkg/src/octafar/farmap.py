"""Closed forms of the farthest-point map on the fundamental domain:
the dividing curve J, the sign certificates G and H, region
classification, the two branches of the map f, and the farthest set.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

from .hexagon import essential_closed_form, hexagon, psi
from .planar import EPS, SQRT3
from .surface import (
    SHARP_VERTEX,
    TOP_VERTEX,
    SurfacePoint,
    boundary_inf_distance,
    in_fundamental_domain,
)

TAU_J = 1e-9  # |H| threshold for membership in J


class NotInT(ValueError):
    """The point lies outside the fundamental domain."""


class OutOfDomain(ValueError):
    """curve_J evaluated outside [r, 1/4)."""


class RegionClass(enum.Enum):
    LEFT_OF_J = "LeftOfJ"
    RIGHT_OF_J = "RightOfJ"
    ON_J = "OnJ"
    BOUNDARY_INF = "BoundaryInf"
    TOP_VERTEX = "TopVertex"
    SHARP_VERTEX = "SharpVertex"


@functools.lru_cache(maxsize=None)
def root_r() -> float:
    """The real root of x^3 - x^2 - 4x + 1 in (0, 1)."""

    def poly(x):
        return ((x - 1.0) * x - 4.0) * x + 1.0

    lo, hi = 0.0, 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if poly(lo) * poly(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    x = 0.5 * (lo + hi)
    for _ in range(8):
        d = 3.0 * x * x - 2.0 * x - 4.0
        x -= poly(x) / d
    return x


def _radicand(x: float) -> float:
    return (2.0 + x) * (5.0 - 2.0 * x) * (1.0 - 4.0 * x)


def curve_j(x: float) -> float:
    """Height of the dividing curve J over x in [r, 1/4)."""
    r = root_r()
    if x < r - EPS or x >= 0.25:
        raise OutOfDomain(f"curve J is defined on [{r}, 0.25), got {x}")
    t = max(_radicand(x), 0.0)
    return (1.0 - x - t ** (1.0 / 3.0)) / SQRT3


def eval_h(p: complex) -> float:
    """The quintic certificate polynomial H(x + iy)."""
    x, y = p.real, p.imag
    s = SQRT3
    c0 = ((((3.0 * x - 6.0) * x - 9.0) * x + 15.0) * x - 3.0) * x
    c1 = s * ((((3.0 * x - 4.0) * x - 6.0) * x - 3.0) * x + 1.0)
    c2 = ((2.0 * x - 6.0) * x + 15.0) * x - 2.0
    c3 = 2.0 * s * (x * x - 1.0)
    c4 = 4.0 - x
    c5 = -s
    return c0 + y * (c1 + y * (c2 + y * (c3 + y * (c4 + y * c5))))


def eval_g(p: complex) -> float:
    """G(p) = |p2 - (025)|^2 - |p2 - (235)|^2, via the printed rational form."""
    x, y = p.real, p.imag
    d1 = SQRT3 * x + y - 2.0 * SQRT3
    d2 = SQRT3 * x + y + SQRT3
    return -18.0 * eval_h(p) / (d1 * d1 * d2 * d2)


def eval_g_direct(p: complex) -> float:
    """The defining distance difference for G (independent route)."""
    verts = hexagon(p).vertices
    p2 = verts[2]
    d25 = abs(p2 - essential_closed_form("025", p))
    d35 = abs(p2 - essential_closed_form("235", p))
    return d25 * d25 - d35 * d35


def classify(p: complex) -> RegionClass:
    """Exhaustive region classification of a point of T."""
    if not in_fundamental_domain(p, EPS):
        raise NotInT(f"{p} is outside the fundamental domain")
    if abs(p - SHARP_VERTEX) <= EPS:
        return RegionClass.SHARP_VERTEX
    if abs(p - TOP_VERTEX) <= EPS:
        return RegionClass.TOP_VERTEX
    if boundary_inf_distance(p) <= EPS:
        return RegionClass.BOUNDARY_INF
    r = root_r()
    if abs(eval_h(p)) < TAU_J and (r - EPS) <= p.real < 0.25:
        return RegionClass.ON_J
    return RegionClass.LEFT_OF_J if eval_g(p) > 0.0 else RegionClass.RIGHT_OF_J


def f_left(p: complex) -> complex:
    """The branch of f used left of J (maps toward the short side)."""
    x, y = p.real, p.imag
    return complex(
        (-x * y - SQRT3 * x + SQRT3 * y * y - y) / (SQRT3 * x + y - 2.0 * SQRT3),
        y,
    )


def f_right(p: complex) -> complex:
    """The branch of f used right of J (maps toward the long side)."""
    x, y = p.real, p.imag
    return complex(
        (-x * y + 2.0 * SQRT3 * x + SQRT3 * y * y - y) / (SQRT3 * x + y + SQRT3),
        y,
    )


def apply_f(p: complex) -> complex | tuple[complex, complex]:
    """The farthest-point dynamics on T.

    Returns a single point except on J, where both branch images are
    returned as a (left, right) pair.
    """
    region = classify(p)
    if region in (RegionClass.TOP_VERTEX, RegionClass.SHARP_VERTEX):
        return p
    if region is RegionClass.ON_J:
        return (f_left(p), f_right(p))
    if region is RegionClass.BOUNDARY_INF:
        # Both branches fix the boundary; either one serves.
        return f_left(p)
    if region is RegionClass.LEFT_OF_J:
        return f_left(p)
    return f_right(p)


@dataclass(frozen=True)
class FarpointResult:
    region: RegionClass
    points: tuple[SurfacePoint, ...]
    chart_points: tuple[complex, ...]  # the essential vertices in A0
    distance: float


def farpoint_set(p: complex) -> FarpointResult:
    """The farthest-point set of p, with its realizing A0 vertices."""
    region = classify(p)
    if region is RegionClass.SHARP_VERTEX:
        chart = complex(2.5, 1.5 * SQRT3)  # alpha0-preimage of the sharp vertex
        return FarpointResult(region, (psi(chart),), (chart,), 3.0)
    hexa = hexagon(p)
    if region is RegionClass.ON_J:
        v25 = essential_closed_form("025", p)
        v35 = essential_closed_form("235", p)
        return FarpointResult(
            region, (psi(v25), psi(v35)), (v25, v35), hexa.mu(v25)
        )
    if region is RegionClass.LEFT_OF_J:
        v = essential_closed_form("025", p)
    elif region is RegionClass.RIGHT_OF_J:
        v = essential_closed_form("235", p)
    else:
        # Boundary and top-vertex cases: (025) and (235) coincide.
        v = essential_closed_form("025", p)
    return FarpointResult(region, (psi(v),), (v,), hexa.mu(v))


# ---------------------------------------------------------------------------
# Distance to J (for sampling filters and diagnostics).
# ---------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _j_polyline(n: int = 2001) -> np.ndarray:
    """J sampled uniformly in height (the curve is steep in y near the top)."""
    r = root_r()
    ys = np.linspace(0.0, SQRT3 / 4.0 - 1e-9, n)
    xs = np.empty(n)
    for i, y in enumerate(ys):
        lo, hi = r, 0.25 - 1e-15
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if curve_j(mid) < y:
                lo = mid
            else:
                hi = mid
        xs[i] = 0.5 * (lo + hi)
    return np.column_stack([xs, ys])


def curve_j_x_at_height(y: float) -> float:
    """Inverse of curve_j: the x with curve_j(x) = y, for y in [0, sqrt3/4)."""
    if y < -EPS or y >= SQRT3 / 4.0:
        raise OutOfDomain(f"height {y} outside [0, sqrt3/4)")
    r = root_r()
    lo, hi = r, 0.25 - 1e-15
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if curve_j(mid) < y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def dist_to_j(p: complex) -> float:
    """Euclidean distance from p to the polyline approximation of J."""
    pts = _j_polyline()
    a = pts[:-1]
    b = pts[1:]
    v = b - a
    w = np.array([p.real, p.imag]) - a
    vv = (v * v).sum(axis=1)
    t = np.clip((w * v).sum(axis=1) / np.maximum(vv, 1e-300), 0.0, 1.0)
    d = w - t[:, None] * v
    return float(np.sqrt((d * d).sum(axis=1).min()))
