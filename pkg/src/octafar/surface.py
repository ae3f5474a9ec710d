"""The regular octahedron as a metric surface.

Each of the 8 faces carries its own chart: the equilateral triangle with
vertices at the cube roots of unity (edge length sqrt(3)).  Face 0 is the
reference face, face 7 its antipode, and the antipodal pairing is
face i <-> face 7-i throughout.  The chart conventions are chosen so that

    antipode((face, z)) == (7 - face, conj(z))

and so that for every face the identity chart map is realized by a
symmetry of the octahedron; folding into the fundamental domain T only
ever needs the dihedral group of the reference chart.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .planar import EPS, SQRT3, PlaneIsometry, cross

# Chart triangle: cube roots of unity, CCW.
CHART_VERTICES = (
    complex(1.0, 0.0),
    complex(-0.5, SQRT3 / 2.0),
    complex(-0.5, -SQRT3 / 2.0),
)

# Fundamental domain T: centroid, sharp vertex (a cone point), edge midpoint.
T_VERTICES = (
    complex(0.0, 0.0),
    complex(1.0, 0.0),
    complex(0.25, SQRT3 / 4.0),
)
SHARP_VERTEX = T_VERTICES[1]
TOP_VERTEX = T_VERTICES[2]

# Octahedron vertices are the signed coordinate axes; antipodal pairs share
# a color.  The sharp vertex of T (chart vertex u0 of face 0) is black.
_AXIS_COLOR = ("black", "white", "grey")

_EDGE_LEN = SQRT3
_EMBED_SCALE = math.sqrt(1.5)  # vertex radius giving edge length sqrt(3)


class NotConverged(RuntimeError):
    """Raising the unfolding depth changed a distance: depth limit too low."""


@dataclass(frozen=True)
class SurfacePoint:
    """A point on the octahedron: face id plus chart coordinates."""

    face: int
    z: complex

    @property
    def x(self) -> float:
        return self.z.real

    @property
    def y(self) -> float:
        return self.z.imag


@dataclass(frozen=True)
class Face:
    """One face record: octahedron vertices per chart corner, neighbors, gluing."""

    id: int
    oct_vertices: tuple[tuple[int, int], ...]  # (axis, sign) per chart corner
    colors: tuple[str, str, str]
    neighbors: tuple[int, int, int]  # neighbor across edge k = (corner k, corner k+1)
    glue: tuple[PlaneIsometry, ...]  # chart of neighbor k -> this chart's plane


def _face_sign_vectors() -> list[tuple[int, int, int]]:
    # Face ids chosen so that the antipodal face of i is 7 - i.
    return [
        (1, 1, 1),     # 0
        (-1, 1, 1),    # 1
        (1, -1, 1),    # 2
        (1, 1, -1),    # 3
        (-1, -1, 1),   # 4 = antipode of 3
        (-1, 1, -1),   # 5 = antipode of 2
        (1, -1, -1),   # 6 = antipode of 1
        (-1, -1, -1),  # 7 = antipode of 0
    ]


def _oct_vertices_ccw(signs: tuple[int, int, int]) -> tuple[tuple[int, int], ...]:
    # Ordered CCW as seen from outside: (x, y, z) order when the sign product
    # is +1, (x, z, y) otherwise.
    sx, sy, sz = signs
    if sx * sy * sz > 0:
        return ((0, sx), (1, sy), (2, sz))
    return ((0, sx), (2, sz), (1, sy))


@dataclass(frozen=True)
class OctahedronModel:
    """Immutable face/adjacency/gluing structure of the octahedron surface."""

    faces: tuple[Face, ...]

    def antipodal_face(self, face: int) -> int:
        return 7 - face

    def contains(self, p: SurfacePoint, tol: float = EPS) -> bool:
        return in_chart_triangle(p.z, tol)

    def embed(self, p: SurfacePoint) -> tuple[float, float, float]:
        """Position of p on the octahedron embedded in 3-space."""
        face = self.faces[p.face]
        l0, l1, l2 = barycentric(p.z)
        pos = [0.0, 0.0, 0.0]
        for lam, (axis, sign) in zip((l0, l1, l2), face.oct_vertices):
            pos[axis] += lam * sign * _EMBED_SCALE
        return tuple(pos)

    def cone_points(self) -> list[tuple[str, SurfacePoint]]:
        """The six cone points, one chart representative each, with colors."""
        out = []
        seen = set()
        for face in self.faces:
            for k, (axis, sign) in enumerate(face.oct_vertices):
                if (axis, sign) not in seen:
                    seen.add((axis, sign))
                    out.append((_AXIS_COLOR[axis], SurfacePoint(face.id, CHART_VERTICES[k])))
        return out

    def cone_angle(self, axis: int, sign: int) -> float:
        """Total angle around an octahedron vertex (pi/3 per incident face)."""
        count = sum(
            1
            for face in self.faces
            if (axis, sign) in face.oct_vertices
        )
        return count * math.pi / 3.0


def barycentric(z: complex) -> tuple[float, float, float]:
    """Barycentric coordinates of z in the standard chart triangle."""
    a, b, c = CHART_VERTICES
    denom = cross(b - a, c - a)
    l1 = cross(z - a, c - a) / denom
    l2 = cross(b - a, z - a) / denom
    return (1.0 - l1 - l2, l1, l2)


def in_chart_triangle(z: complex, tol: float = EPS) -> bool:
    return all(lam >= -tol for lam in barycentric(z))


def build_model() -> OctahedronModel:
    """Construct the octahedron model; face 0 carries the fundamental domain."""
    signs = _face_sign_vectors()
    oct_verts = [_oct_vertices_ccw(s) for s in signs]
    vert_to_face = {}
    for fid, verts in enumerate(oct_verts):
        for k, v in enumerate(verts):
            vert_to_face[(fid, v)] = k

    faces = []
    for fid, verts in enumerate(oct_verts):
        colors = tuple(_AXIS_COLOR[axis] for axis, _ in verts)
        neighbors = []
        glue = []
        for k in range(3):
            va, vb = verts[k], verts[(k + 1) % 3]
            # The neighbor shares both edge vertices.
            nb = next(
                g
                for g in range(8)
                if g != fid and va in oct_verts[g] and vb in oct_verts[g]
            )
            ka = vert_to_face[(nb, va)]
            kb = vert_to_face[(nb, vb)]
            iso = PlaneIsometry.from_two_points(
                CHART_VERTICES[ka], CHART_VERTICES[kb],
                CHART_VERTICES[k], CHART_VERTICES[(k + 1) % 3],
            )
            neighbors.append(nb)
            glue.append(iso)
        faces.append(
            Face(fid, verts, colors, tuple(neighbors), tuple(glue))
        )
    return OctahedronModel(tuple(faces))


def antipode(p: SurfacePoint) -> SurfacePoint:
    """Antipodal map: central symmetry of the octahedron on surface points."""
    return SurfacePoint(7 - p.face, p.z.conjugate())


# ---------------------------------------------------------------------------
# Fundamental domain T and folding.
# ---------------------------------------------------------------------------

def in_fundamental_domain(z: complex, tol: float = EPS) -> bool:
    """Membership in the closed triangle T (scale-aware tolerancing)."""
    if z.imag < -tol:
        return False
    if (SQRT3 * z.real - z.imag) / 2.0 < -tol:
        return False
    if (1.0 - z.real - SQRT3 * z.imag) / 2.0 < -tol:
        return False
    return True


def boundary_inf_distance(z: complex) -> float:
    """Distance to the nearer of the two non-horizontal sides of T (as lines)."""
    left = abs(SQRT3 * z.real - z.imag) / 2.0
    right = abs(1.0 - z.real - SQRT3 * z.imag) / 2.0
    return min(left, right)


_OMEGA = cmath.exp(2j * math.pi / 3.0)


@dataclass(frozen=True)
class FoldSymmetry:
    """Surface symmetry carrying a point to the fundamental domain.

    The chart-level action is z -> omega^rotation * z, followed by
    conjugation when reflect is set, combined with the face relabeling
    face -> 0; unfold() inverts it.
    """

    face: int
    rotation: int  # number of +120 degree turns applied before reflection
    reflect: bool

    def unfold(self, t: complex) -> SurfacePoint:
        z = t.conjugate() if self.reflect else t
        z *= _OMEGA ** ((-self.rotation) % 3)
        return SurfacePoint(self.face, z)


def fold_to_fundamental(p: SurfacePoint) -> tuple[complex, FoldSymmetry]:
    """Carry p into T; returns the target point and the symmetry used.

    The identity chart map between any face and face 0 is induced by an
    octahedron symmetry, so only the dihedral group of the reference chart
    is needed after dropping the face id.
    """
    z = p.z
    if abs(z) <= EPS:
        return (0.0 + 0.0j, FoldSymmetry(p.face, 0, False))
    theta = cmath.phase(z)
    k = math.floor((theta + math.pi / 3.0) / (2.0 * math.pi / 3.0))
    rotation = (-k) % 3
    z = z * _OMEGA**rotation
    reflect = z.imag < 0.0
    if reflect:
        z = z.conjugate()
    if abs(z.imag) <= EPS:
        z = complex(z.real, 0.0)
    return (z, FoldSymmetry(p.face, rotation, reflect))
