"""The six unfolded probe copies, the hexagon they span, its Voronoi
decomposition over the antipodal-face triangle A0, and the structural
stability certificate functions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .planar import (
    EPS,
    SQRT3,
    Line,
    PlaneIsometry,
    bisector,
    circumcenter,
    cocircularity,
    cross,
    dot,
)
from .surface import CHART_VERTICES, SHARP_VERTEX, SurfacePoint, antipode


class SharpVertexDegenerate(ValueError):
    """The probe sits on the cone-point vertex of T: no hexagon exists."""


class TranslationPair(ValueError):
    """The requested isometry pair composes to a translation (no center)."""


def _w(k: int, ell: int) -> complex:
    return complex(k / 2.0, ell * SQRT3 / 2.0)


# The six direct isometries developing the probe: p_j = I_j(p) = w1*p + w2.
UNFOLD_ISOMETRIES: tuple[PlaneIsometry, ...] = (
    PlaneIsometry("direct", _w(2, 0), _w(0, 0)),    # identity
    PlaneIsometry("direct", _w(-1, 1), _w(3, -1)),
    PlaneIsometry("direct", _w(-1, -1), _w(9, 1)),
    PlaneIsometry("direct", _w(2, 0), _w(9, 3)),
    PlaneIsometry("direct", _w(-1, 1), _w(3, 5)),
    PlaneIsometry("direct", _w(-1, -1), _w(0, 4)),
)


def alpha0(z: complex) -> complex:
    """Reflective chart isometry carrying A0 onto the reference face."""
    return cmath.exp(-2j * math.pi / 3.0) * (2.0 - 1j * SQRT3 - z.conjugate())


def alpha0_inv(v: complex) -> complex:
    return (2.0 + 1j * SQRT3) - cmath.exp(-2j * math.pi / 3.0) * v.conjugate()


# A0 recovered as the alpha0-preimage of the reference face's vertices.
A0_VERTICES: tuple[complex, ...] = tuple(alpha0_inv(v) for v in CHART_VERTICES)

# Edge labels follow the pair of hexagon vertices each side faces; the
# corners are the rotation centers v34, v12, v05 in the A0_VERTICES order.
A0_EDGES: dict[str, tuple[complex, complex]] = {
    "e01": (A0_VERTICES[1], A0_VERTICES[2]),
    "e23": (A0_VERTICES[0], A0_VERTICES[1]),
    "e45": (A0_VERTICES[0], A0_VERTICES[2]),
}


def unfold_isometries() -> tuple[tuple[PlaneIsometry, ...], tuple[complex, ...]]:
    """The developing isometries I_0..I_5 together with the triangle A0."""
    return UNFOLD_ISOMETRIES, A0_VERTICES


def hexagon_vertices_raw(p: complex) -> tuple[complex, ...]:
    """The six developed copies of p (no degeneracy guard)."""
    return tuple(iso(p) for iso in UNFOLD_ISOMETRIES)


@dataclass(frozen=True)
class Hexagon:
    probe: complex
    vertices: tuple[complex, ...]

    def mu(self, q: complex) -> float:
        return min(abs(q - v) for v in self.vertices)


def hexagon(p: complex) -> Hexagon:
    """The solid hexagon H_p spanned by the six copies of p."""
    if abs(p - SHARP_VERTEX) <= EPS:
        raise SharpVertexDegenerate("probe is the cone-point vertex of T")
    return Hexagon(p, hexagon_vertices_raw(p))


def mu(p: complex, q: complex) -> float:
    """min_k |q - p_k|: the surface distance seen through the development."""
    return hexagon(p).mu(q)


def psi(q: complex) -> SurfacePoint:
    """Wrap a point of A0 onto the surface (lands in the antipodal face)."""
    return antipode(SurfacePoint(0, alpha0(q)))


# ---------------------------------------------------------------------------
# Voronoi decomposition.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VoronoiCell:
    index: int
    polygon: tuple[complex, ...]  # CCW, not closed


@dataclass(frozen=True)
class EssentialVertex:
    label: str  # e.g. "025", merged cases like "0235"
    location: complex


ESSENTIAL_LABELS = ("012", "025", "235", "345")


def _clip_halfplane(poly: list[complex], keep_fn) -> list[complex]:
    """Sutherland-Hodgman step keeping points with keep_fn(z) <= EPS."""
    out: list[complex] = []
    n = len(poly)
    for i in range(n):
        a = poly[i]
        b = poly[(i + 1) % n]
        sa = keep_fn(a)
        sb = keep_fn(b)
        ina = sa <= EPS
        inb = sb <= EPS
        if ina:
            out.append(a)
        if ina != inb:
            t = sa / (sa - sb)
            out.append(a + t * (b - a))
    # Drop consecutive duplicates.
    dedup: list[complex] = []
    for z in out:
        if not dedup or abs(z - dedup[-1]) > EPS:
            dedup.append(z)
    if len(dedup) > 1 and abs(dedup[0] - dedup[-1]) <= EPS:
        dedup.pop()
    return dedup


def voronoi(p: complex) -> tuple[list[VoronoiCell], list[EssentialVertex]]:
    """Voronoi cells of H_p and its essential vertices (merged labels when
    circumcenters coincide within tolerance)."""
    hexa = hexagon(p)
    verts = hexa.vertices
    cells = []
    for j in range(6):
        poly = list(verts)
        for k in range(6):
            if k == j:
                continue
            m = 0.5 * (verts[j] + verts[k])
            d = verts[k] - verts[j]

            def keep(z, m=m, d=d):
                return dot(z - m, d) / abs(d)

            poly = _clip_halfplane(poly, keep)
            if not poly:
                break
        cells.append(VoronoiCell(j, tuple(poly)))

    locs = {
        label: circumcenter(verts[int(label[0])], verts[int(label[1])], verts[int(label[2])])
        for label in ESSENTIAL_LABELS
    }
    essential = _merge_essential(locs)
    return cells, essential


def _merge_essential(locs: dict[str, complex]) -> list[EssentialVertex]:
    labels = list(locs)
    parent = {lab: lab for lab in labels}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, a in enumerate(labels):
        for b in labels[i + 1:]:
            if abs(locs[a] - locs[b]) <= 10 * EPS:
                parent[find(a)] = find(b)
    groups: dict[str, list[str]] = {}
    for lab in labels:
        groups.setdefault(find(lab), []).append(lab)
    out = []
    for members in groups.values():
        digits = sorted(set("".join(members)))
        loc = sum(locs[m] for m in members) / len(members)
        out.append(EssentialVertex("".join(digits), loc))
    out.sort(key=lambda ev: ev.label)
    return out


# ---------------------------------------------------------------------------
# Closed forms for the essential vertices.
# ---------------------------------------------------------------------------

def essential_closed_form(label: str, p: complex) -> complex:
    """Rational closed form of an essential vertex, verbatim in x, y, sqrt3."""
    x, y = p.real, p.imag
    s = SQRT3
    if label == "012":
        den = 2.0 * (s * x * x - 3.0 * s * x + 3.0 * y + y * y * s + 2.0 * s)
        re = 3.0 * s * x * x - 6.0 * y * x - 11.0 * s * x + 21.0 * y + 5.0 * y * y * s + 8.0 * s
        im = 3.0 * x * x - 2.0 * s * y * x - 15.0 * x - 3.0 * y * y - s * y + 12.0
        return complex(re / den, im / den)
    if label == "025":
        den = 2.0 * (y + x * s - 2.0 * s)
        re = 2.0 * s * y * y + 2.0 * x * y - 3.0 * y + 3.0 * x * s - 8.0 * s
        im = 2.0 * y * y - 2.0 * s * x * y + 3.0 * s * y + 3.0 * x - 12.0
        return complex(re / den, im / den)
    if label == "235":
        den = y + x * s + s
        re = s * y * y + x * y + 3.0 * y + 3.0 * x * s + 2.0 * s
        im = y * y - s * x * y + 6.0 * x + 3.0
        return complex(re / den, im / den)
    if label == "345":
        den = s * x * x + 3.0 * s * x - 3.0 * y + y * y * s + 2.0 * s
        re = 3.0 * s * x * x + 8.0 * s * x - 3.0 * y + y * y * s + 4.0 * s
        im = 6.0 * x * x + 2.0 * y * s * x + 15.0 * x + 6.0 * y * y - 2.0 * s * y + 6.0
        return complex(re / den, im / den)
    raise ValueError(f"unknown essential vertex label {label!r}")


def a0_interior_margin(q: complex) -> float:
    """Smallest signed distance from q to the edges of A0 (positive inside)."""
    a, b, c = A0_VERTICES
    # A0_VERTICES is clockwise; orient so the interior is on the left.
    tri = (a, c, b) if cross(c - a, b - a) > 0 else (a, b, c)
    margins = []
    for i in range(3):
        u, v = tri[i], tri[(i + 1) % 3]
        d = (v - u) / abs(v - u)
        margins.append(cross(d, q - u))
    return min(margins)


# ---------------------------------------------------------------------------
# Parametrization of T and the stability certificates.
# ---------------------------------------------------------------------------

def phi(a: float, b: float) -> complex:
    """Surjective polynomial map from the unit square onto T."""
    return complex(a + 0.25 * (1.0 - a) * b, SQRT3 / 4.0 * (1.0 - a) * b)


_CHI_SCALE = 16.0 / (27.0 * SQRT3)

_QUADS = {"0125": (0, 1, 2, 5), "2345": (2, 3, 4, 5), "0235": (0, 2, 3, 5)}


def nu1(a: float, b: float) -> float:
    return (
        (8.0 - 4.0 * a * a - b * b)
        + (8.0 * a - 4.0 * a * b - a * a * b * b)
        + (2.0 * b + 2.0 * a * a * b + 2.0 * a * b * b)
    )


def nu2(a: float, b: float) -> float:
    return (
        (16.0 * a - 2.0 * a * b - 2.0 * a * a * b - 2.0 * a * b * b)
        + (4.0 + a * a * b * b + 4.0 * a * a + 4.0 * b + b * b)
    )


@dataclass(frozen=True)
class StabilityValues:
    """Each certificate computed two ways: via the cross ratio and factored."""

    t0125: tuple[float, float]
    t2345: tuple[float, float]
    t0235: tuple[float, float]
    nu1: float
    nu2: float


def stability_functions(a: float, b: float) -> StabilityValues:
    p = phi(a, b)
    verts = hexagon_vertices_raw(p)
    chi = {
        name: _CHI_SCALE * cocircularity(*(verts[i] for i in quad))
        for name, quad in _QUADS.items()
    }
    return StabilityValues(
        t0125=(chi["0125"], (a - 1.0) * b * nu1(a, b)),
        t2345=(chi["2345"], (1.0 - a) * b * nu2(a, b)),
        t0235=(chi["0235"], 24.0 * a * (a - 1.0) * (b - 1.0)),
        nu1=nu1(a, b),
        nu2=nu2(a, b),
    )


def rotation_center(j: int, k: int) -> complex:
    """Fixed point of I_j o I_k^{-1} (a 120 degree rotation)."""
    if j == k:
        raise ValueError("indices must differ")
    if (k - j) % 6 == 3:
        raise TranslationPair(f"I_{j} I_{k}^-1 is a translation")
    comp = UNFOLD_ISOMETRIES[j].compose(UNFOLD_ISOMETRIES[k].invert())
    return comp.fixed_point()


def hexagon_boundary_distance(hexa: Hexagon, q: complex) -> float:
    """Distance from q to the boundary polygon of H_p."""
    best = math.inf
    verts = hexa.vertices
    for i in range(6):
        a = verts[i]
        b = verts[(i + 1) % 6]
        v = b - a
        t = max(0.0, min(1.0, dot(q - a, v) / dot(v, v)))
        best = min(best, abs(q - (a + t * v)))
    return best


def bisector_line(hexa: Hexagon, j: int, k: int) -> Line:
    """The bisector b_jk of the hexagon vertices p_j, p_k."""
    return bisector(hexa.vertices[j], hexa.vertices[k])
