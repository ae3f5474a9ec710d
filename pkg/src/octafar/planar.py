"""Tolerance-aware 2D primitives on the unfolding chart.

Plane points are ordinary complex numbers: the reference face has its
vertices at the three cube roots of unity, so the edge length is sqrt(3)
and every coordinate that appears anywhere in the package stays in a
bounded chart (|z| < 8).  All predicates use the global tolerance EPS.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

EPS = 1e-9
SQRT3 = math.sqrt(3.0)

PlanePoint = complex


class CollinearInput(ValueError):
    """Circumcenter requested for three collinear points."""


class PoleAt(ArithmeticError):
    """A linear fractional transformation was evaluated at its pole."""

    def __init__(self, x: float):
        super().__init__(f"LFT has a pole at x = {x}")
        self.x = x


def close(a: complex, b: complex, tol: float = EPS) -> bool:
    return abs(a - b) <= tol


def cross(a: complex, b: complex) -> float:
    """z-component of the cross product of a and b as plane vectors."""
    return a.real * b.imag - a.imag * b.real


def dot(a: complex, b: complex) -> float:
    return a.real * b.real + a.imag * b.imag


def signed_area(a: complex, b: complex, c: complex) -> float:
    """Twice the signed area of triangle abc (positive when CCW)."""
    return cross(b - a, c - a)


def circumcenter(a: complex, b: complex, c: complex) -> complex:
    """Unique point equidistant from a, b, c.

    Raises CollinearInput when the scale-aware signed-area test flags the
    triple as degenerate.
    """
    area2 = signed_area(a, b, c)
    scale = max(abs(b - a), abs(c - a), abs(c - b), 1.0)
    if abs(area2) <= EPS * scale:
        raise CollinearInput(f"collinear points {a}, {b}, {c}")
    # Perpendicular-bisector intersection, written out explicitly.
    d = 2.0 * (
        a.real * (b.imag - c.imag)
        + b.real * (c.imag - a.imag)
        + c.real * (a.imag - b.imag)
    )
    ux = (
        (abs(a) ** 2) * (b.imag - c.imag)
        + (abs(b) ** 2) * (c.imag - a.imag)
        + (abs(c) ** 2) * (a.imag - b.imag)
    ) / d
    uy = (
        (abs(a) ** 2) * (c.real - b.real)
        + (abs(b) ** 2) * (a.real - c.real)
        + (abs(c) ** 2) * (b.real - a.real)
    ) / d
    return complex(ux, uy)


def cocircularity(z1: complex, z2: complex, z3: complex, z4: complex) -> float:
    """Imaginary part of the cross ratio; zero iff co-circular or collinear."""
    return ((z1 - z2) * (z3 - z4) * ((z1 - z3) * (z2 - z4)).conjugate()).imag


@dataclass(frozen=True)
class Line:
    """Oriented line given by an anchor point and a unit direction."""

    anchor: complex
    direction: complex

    def __post_init__(self):
        n = abs(self.direction)
        if abs(n - 1.0) > EPS:
            object.__setattr__(self, "direction", self.direction / n)

    def signed_distance(self, z: complex) -> float:
        """Positive on the left of the oriented direction."""
        return cross(self.direction, z - self.anchor)

    def project(self, z: complex) -> complex:
        t = dot(z - self.anchor, self.direction)
        return self.anchor + t * self.direction


def bisector(a: complex, b: complex) -> Line:
    """Perpendicular bisector of segment ab, oriented with a on its left."""
    mid = 0.5 * (a + b)
    d = b - a
    return Line(mid, complex(-d.imag, d.real) / abs(d))


def line_intersection(l1: Line, l2: Line) -> complex:
    denom = cross(l1.direction, l2.direction)
    if abs(denom) <= EPS:
        raise CollinearInput("parallel lines do not intersect")
    t = cross(l2.anchor - l1.anchor, l2.direction) / denom
    return l1.anchor + t * l1.direction


@dataclass(frozen=True)
class PlaneIsometry:
    """Rigid motion of the chart plane.

    direct:     z -> w*z + c
    reflective: z -> w*conj(z) + c
    with |w| = 1.
    """

    kind: str  # "direct" | "reflective"
    w: complex
    c: complex

    def __post_init__(self):
        if self.kind not in ("direct", "reflective"):
            raise ValueError(f"unknown isometry kind {self.kind!r}")
        if abs(abs(self.w) - 1.0) > EPS:
            raise ValueError("rotation part must have unit norm")

    def __call__(self, z: complex) -> complex:
        if self.kind == "direct":
            return self.w * z + self.c
        return self.w * z.conjugate() + self.c

    def compose(self, other: "PlaneIsometry") -> "PlaneIsometry":
        """self after other: (self.compose(other))(z) == self(other(z))."""
        if self.kind == "direct":
            if other.kind == "direct":
                return PlaneIsometry("direct", self.w * other.w, self.w * other.c + self.c)
            return PlaneIsometry("reflective", self.w * other.w, self.w * other.c + self.c)
        if other.kind == "direct":
            return PlaneIsometry(
                "reflective",
                self.w * other.w.conjugate(),
                self.w * other.c.conjugate() + self.c,
            )
        return PlaneIsometry(
            "direct",
            self.w * other.w.conjugate(),
            self.w * other.c.conjugate() + self.c,
        )

    def invert(self) -> "PlaneIsometry":
        if self.kind == "direct":
            wi = 1.0 / self.w
            return PlaneIsometry("direct", wi, -wi * self.c)
        return PlaneIsometry("reflective", self.w, -self.w * self.c.conjugate())

    @staticmethod
    def identity() -> "PlaneIsometry":
        return PlaneIsometry("direct", 1.0 + 0.0j, 0.0 + 0.0j)

    @staticmethod
    def from_two_points(p1: complex, p2: complex, q1: complex, q2: complex) -> "PlaneIsometry":
        """Direct isometry with p1 -> q1 and p2 -> q2 (|p1-p2| must equal |q1-q2|)."""
        dp = p2 - p1
        if abs(dp) <= EPS:
            raise ValueError("defining points coincide")
        w = (q2 - q1) / dp
        w /= abs(w)
        return PlaneIsometry("direct", w, q1 - w * p1)

    def rotation_angle(self) -> float:
        """Rotation angle in radians (direct isometries only)."""
        if self.kind != "direct":
            raise ValueError("reflective isometries have no rotation angle")
        return math.atan2(self.w.imag, self.w.real)

    def fixed_point(self) -> complex:
        """Fixed point of a direct non-translation isometry."""
        if self.kind != "direct":
            raise ValueError("only direct isometries supported here")
        denom = 1.0 - self.w
        if abs(denom) <= EPS:
            raise ValueError("translation has no fixed point")
        return self.c / denom


# Convenience wrappers matching the operation-style API.

def apply_isometry(g: PlaneIsometry, p: complex) -> complex:
    return g(p)


def compose(g: PlaneIsometry, h: PlaneIsometry) -> PlaneIsometry:
    return g.compose(h)


def invert(g: PlaneIsometry) -> PlaneIsometry:
    return g.invert()


@dataclass(frozen=True)
class Lft1D:
    """Real linear fractional transformation x -> (a*x + b)/(c*x + d)."""

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if abs(self.det) <= EPS:
            raise ValueError("degenerate LFT: vanishing determinant")

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def apply(self, x: float) -> float:
        denom = self.c * x + self.d
        if abs(denom) <= EPS:
            raise PoleAt(x)
        return (self.a * x + self.b) / denom

    def fixed_points(self) -> tuple[float, ...]:
        """Real fixed points: roots of c*x^2 + (d-a)*x - b = 0."""
        if abs(self.c) <= EPS:
            if abs(self.d - self.a) <= EPS:
                return ()
            return (self.b / (self.d - self.a),)
        disc = (self.d - self.a) ** 2 + 4.0 * self.c * self.b
        if disc < -EPS:
            return ()
        disc = max(disc, 0.0)
        r = math.sqrt(disc)
        x1 = (self.a - self.d - r) / (2.0 * self.c)
        x2 = (self.a - self.d + r) / (2.0 * self.c)
        if abs(x1 - x2) <= EPS:
            return (0.5 * (x1 + x2),)
        return tuple(sorted((x1, x2)))

    def multiplier(self, x0: float) -> float:
        """Derivative at a fixed point x0."""
        if abs(self.apply(x0) - x0) > math.sqrt(EPS):
            raise ValueError(f"{x0} is not a fixed point")
        return self.det / (self.c * x0 + self.d) ** 2

    def compose(self, other: "Lft1D") -> "Lft1D":
        """Matrix product: (self.compose(other))(x) == self(other(x))."""
        return Lft1D(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )


def lft_apply(m: Lft1D, x: float) -> float:
    return m.apply(x)


def lft_fixed_points(m: Lft1D) -> tuple[float, ...]:
    return m.fixed_points()


def lft_multiplier(m: Lft1D, x0: float) -> float:
    return m.multiplier(x0)
