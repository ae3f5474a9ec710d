"""Iteration of the farthest-point dynamics: the per-height linear
fractional coefficients, orbits, the attracting boundary fixed points,
and forward images of the dividing curve.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .farmap import (
    NotInT,
    RegionClass,
    apply_f,
    classify,
    curve_j,
    f_left,
    f_right,
    root_r,
)
from .planar import EPS, SQRT3, Lft1D
from .surface import boundary_inf_distance, in_fundamental_domain


class Branch(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def lft_for_line(y: float, branch: Branch | str) -> Lft1D:
    """Coefficients of x -> f(x + iy).x on the horizontal line at height y.

    The right-branch coefficients are the adjugate of the left-branch ones,
    so the two restrictions are mutually inverse LFTs.
    """
    branch = Branch(branch)
    a = -(y + SQRT3)
    b = SQRT3 * y * y - y
    c = SQRT3
    d = y - 2.0 * SQRT3
    if branch is Branch.LEFT:
        return Lft1D(a, b, c, d)
    return Lft1D(d, -b, -c, a)


def boundary_fixed_point(y: float, branch: Branch | str) -> tuple[float, float]:
    """The attracting fixed point of the branch at height y, with multiplier."""
    branch = Branch(branch)
    x0 = y / SQRT3 if branch is Branch.LEFT else 1.0 - SQRT3 * y
    m = lft_for_line(y, branch)
    return x0, m.multiplier(x0)


class Termination(enum.Enum):
    MAX_ITER = "max_iter"
    CONVERGED = "converged"
    HIT_ON_J = "hit_OnJ"
    LEFT_DOMAIN = "left_domain"


@dataclass(frozen=True)
class Orbit:
    start: complex
    points: tuple[complex, ...]
    terminated_by: Termination
    tol: float

    @property
    def last(self) -> complex:
        return self.points[-1]


def orbit(p: complex, max_iter: int = 200, tol: float = 1e-6) -> Orbit:
    """Forward orbit of p under f.

    Stops when successive points differ by less than tol, when an iterate
    lands on J (the map is two-valued there; no branch is chosen), or at
    max_iter.
    """
    if not in_fundamental_domain(p, EPS):
        raise NotInT(f"{p} is outside the fundamental domain")
    pts = [p]
    for _ in range(max_iter):
        cur = pts[-1]
        if classify(cur) is RegionClass.ON_J:
            return Orbit(p, tuple(pts), Termination.HIT_ON_J, tol)
        nxt = apply_f(cur)
        pts.append(nxt)
        if abs(nxt - cur) < tol:
            return Orbit(p, tuple(pts), Termination.CONVERGED, tol)
    return Orbit(p, tuple(pts), Termination.MAX_ITER, tol)


def forced_orbit(
    p: complex, branch: Branch | str, max_iter: int = 200, tol: float = 1e-6
) -> Orbit:
    """Iterate one branch formula regardless of region.

    This is the J-band semantics: from a point of J the left formula starts
    the left family and the right formula the right family.  Stops on
    convergence, on leaving the domain, or at max_iter.
    """
    if not in_fundamental_domain(p, EPS):
        raise NotInT(f"{p} is outside the fundamental domain")
    step = f_left if Branch(branch) is Branch.LEFT else f_right
    pts = [p]
    for _ in range(max_iter):
        nxt = step(pts[-1])
        if not in_fundamental_domain(nxt, 1e-7):
            return Orbit(p, tuple(pts), Termination.LEFT_DOMAIN, tol)
        pts.append(nxt)
        if abs(nxt - pts[-2]) < tol:
            return Orbit(p, tuple(pts), Termination.CONVERGED, tol)
    return Orbit(p, tuple(pts), Termination.MAX_ITER, tol)


def convergence_side(p: complex) -> Branch:
    """Which non-horizontal side of T the point is nearer to."""
    y = p.imag
    left_gap = abs(p.real - y / SQRT3)
    right_gap = abs(p.real - (1.0 - SQRT3 * y))
    return Branch.LEFT if left_gap <= right_gap else Branch.RIGHT


def j_band_images(
    k_max: int, n_samples: int = 200
) -> list[tuple[list[complex], list[complex]]]:
    """Forward images (f^k(J_left), f^k(J_right)) for k = 1..k_max.

    J itself is sampled once and each branch formula is forced on its copy,
    matching the infinitesimally-offset description of the band pictures.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    if n_samples < 2:
        raise ValueError("need at least two samples")
    r = root_r()
    delta = (0.25 - r) * 1e-4
    xs = [r + (0.25 - delta - r) * i / (n_samples - 1) for i in range(n_samples)]
    left = [complex(x, curve_j(x)) for x in xs]
    right = list(left)
    out = []
    for _ in range(k_max):
        left = [f_left(z) for z in left]
        right = [f_right(z) for z in right]
        out.append((list(left), list(right)))
    return out


def limit_set_distance(p: complex) -> float:
    """Distance to the omega-limit set inside T (the two non-horizontal sides)."""
    return boundary_inf_distance(p)
