"""Farthest-point map on the surface of the regular octahedron.

Library layers: planar primitives, the octahedron surface with an exact
unfolding-based distance oracle, the hexagon/Voronoi machinery over the
fundamental domain, the closed-form farthest-point map and its dynamics,
plus a CLI, SVG figure emitter, verification suite, and HTTP explorer
service.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND as KERNEL_BACKEND
from .dynamics import Branch, Orbit, Termination, boundary_fixed_point, j_band_images, lft_for_line, orbit
from .farmap import (
    FarpointResult,
    NotInT,
    OutOfDomain,
    RegionClass,
    apply_f,
    classify,
    curve_j,
    dist_to_j,
    eval_g,
    eval_h,
    farpoint_set,
    root_r,
)
from .hexagon import (
    A0_VERTICES,
    EssentialVertex,
    Hexagon,
    SharpVertexDegenerate,
    TranslationPair,
    UNFOLD_ISOMETRIES,
    VoronoiCell,
    alpha0,
    essential_closed_form,
    mu,
    phi,
    psi,
    rotation_center,
    stability_functions,
    unfold_isometries,
    voronoi,
)

# The hexagon builder itself lives at octafar.hexagon.hexagon; re-exporting
# it here would shadow the submodule attribute.
from .planar import (
    EPS,
    SQRT3,
    CollinearInput,
    Lft1D,
    Line,
    PlaneIsometry,
    PoleAt,
    bisector,
    circumcenter,
    cocircularity,
)
from .surface import (
    FoldSymmetry,
    NotConverged,
    OctahedronModel,
    SurfacePoint,
    antipode,
    build_model,
    fold_to_fundamental,
    in_fundamental_domain,
)
from .unfolding import farthest_oracle, geodesic_distance

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # planar
    "EPS", "SQRT3", "CollinearInput", "Lft1D", "Line", "PlaneIsometry",
    "PoleAt", "bisector", "circumcenter", "cocircularity",
    # surface
    "FoldSymmetry", "NotConverged", "OctahedronModel", "SurfacePoint",
    "antipode", "build_model", "fold_to_fundamental", "in_fundamental_domain",
    "geodesic_distance", "farthest_oracle",
    # hexagon
    "A0_VERTICES", "EssentialVertex", "Hexagon", "SharpVertexDegenerate",
    "TranslationPair", "UNFOLD_ISOMETRIES", "VoronoiCell", "alpha0",
    "essential_closed_form", "mu", "phi", "psi",
    "rotation_center", "stability_functions", "unfold_isometries", "voronoi",
    # farmap
    "FarpointResult", "NotInT", "OutOfDomain", "RegionClass", "apply_f",
    "classify", "curve_j", "dist_to_j", "eval_g", "eval_h", "farpoint_set",
    "root_r",
    # dynamics
    "Branch", "Orbit", "Termination", "boundary_fixed_point",
    "j_band_images", "lft_for_line", "orbit",
]
