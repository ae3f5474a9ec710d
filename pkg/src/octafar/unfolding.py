"""Geodesic distances by edge-sequence unfolding, and the brute-force
farthest-point oracle.

A face sequence is developed into the source face's chart plane; the
candidate distance is the straight-line distance to the developed query,
admitted when the connecting segment crosses the developed shared edges
in order (closed, eps-fattened, endpoint ties accepted).  Minimizing
geodesics contain no cone point in their interior, so this enumeration
is exhaustive once the depth limit is high enough; stability under
depth+1 is checked and NotConverged raised otherwise.
"""

from __future__ import annotations

import math
import weakref
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .planar import EPS
from .surface import (
    CHART_VERTICES,
    NotConverged,
    OctahedronModel,
    SurfacePoint,
)

M_MAX_DEFAULT = 6
DIAMETER = 3.0  # realized by antipodal cone-point pairs


@dataclass
class _Bundle:
    """Per-target-face candidate arrays for one source face and depth."""

    cand: np.ndarray     # (M, 4) wx, wy, cx, cy
    gates: np.ndarray    # (G, 4) ax, ay, bx, by
    offsets: np.ndarray  # (M + 1,) int64
    nfaces: np.ndarray   # (M,) faces in each sequence


@dataclass
class UnfoldingCache:
    """Enumerated developments per source face (immutable model, lazy build)."""

    model: OctahedronModel
    _bundles: dict = field(default_factory=dict)

    def bundles(self, src: int, depth: int) -> dict[int, _Bundle]:
        key = (src, depth)
        if key not in self._bundles:
            self._bundles[key] = self._enumerate(src, depth)
        return self._bundles[key]

    def _enumerate(self, src: int, depth: int) -> dict[int, _Bundle]:
        per_target: dict[int, list] = {f: [] for f in range(8)}
        faces = self.model.faces

        def visit(face: int, prev: int, w: complex, c: complex,
                  gates: list, nfaces: int):
            per_target[face].append((w, c, list(gates), nfaces))
            if nfaces >= depth:
                return
            rec = faces[face]
            for k in range(3):
                nb = rec.neighbors[k]
                if nb == prev:
                    continue
                # Gate: this face's edge k developed into the source plane.
                a = w * CHART_VERTICES[k] + c
                b = w * CHART_VERTICES[(k + 1) % 3] + c
                iso = rec.glue[k]
                gates.append((a, b))
                visit(nb, face, w * iso.w, w * iso.c + c, gates, nfaces + 1)
                gates.pop()

        visit(src, -1, 1.0 + 0.0j, 0.0 + 0.0j, [], 1)

        out = {}
        for tgt, entries in per_target.items():
            m = len(entries)
            cand = np.empty((m, 4))
            nfaces = np.empty(m, dtype=np.int64)
            offsets = np.zeros(m + 1, dtype=np.int64)
            gate_rows = []
            for i, (w, c, gates, nf) in enumerate(entries):
                cand[i] = (w.real, w.imag, c.real, c.imag)
                nfaces[i] = nf
                offsets[i + 1] = offsets[i] + len(gates)
                for a, b in gates:
                    gate_rows.append((a.real, a.imag, b.real, b.imag))
            gates_arr = (
                np.array(gate_rows) if gate_rows else np.empty((0, 4))
            )
            out[tgt] = _Bundle(cand, gates_arr, offsets, nfaces)
        return out


_CACHES: "weakref.WeakKeyDictionary[OctahedronModel, UnfoldingCache]" = (
    weakref.WeakKeyDictionary()
)


def _cache_for(model: OctahedronModel) -> UnfoldingCache:
    cache = _CACHES.get(model)
    if cache is None:
        cache = UnfoldingCache(model)
        _CACHES[model] = cache
    return cache


def _gate_check(px: float, py: float, ex: float, ey: float,
                gates: np.ndarray, g0: int, g1: int, eps: float) -> bool:
    """Scalar twin of the kernel's admissibility test (same thresholds)."""
    dx = ex - px
    dy = ey - py
    length2 = dx * dx + dy * dy
    length = math.sqrt(length2)
    t_tol = eps / max(length, eps)
    t_prev = 0.0
    zero_len = length2 < (eps * 1e-3) ** 2
    for g in range(g0, g1):
        ax, ay, bx, by = gates[g]
        gx = bx - ax
        gy = by - ay
        glen = math.hypot(gx, gy)
        u_tol = eps / glen
        rx = ax - px
        ry = ay - py
        cross_rg = rx * gy - ry * gx
        line_dist = abs(cross_rg) / glen
        denom = dx * gy - dy * gx
        if abs(denom) <= 1e-12 * glen * (abs(dx) + abs(dy)) + 1e-300:
            if zero_len:
                if _seg_dist(px, py, ax, ay, bx, by) > eps:
                    return False
                continue
            if line_dist > eps:
                return False
            l2 = max(length2, 1e-300)
            ta = (rx * dx + ry * dy) / l2
            tb = ((bx - px) * dx + (by - py) * dy) / l2
            lo, hi = min(ta, tb), max(ta, tb)
            if hi < t_prev - t_tol or lo > 1.0 + t_tol:
                return False
            t_prev = max(t_prev, min(lo, 1.0))
        else:
            t = cross_rg / denom
            u = (rx * dy - ry * dx) / denom
            if not (t_prev - t_tol <= t <= 1.0 + t_tol and -u_tol <= u <= 1.0 + u_tol):
                return False
            t_prev = max(t_prev, t)
    return True


def _seg_dist(px, py, ax, ay, bx, by) -> float:
    vx = bx - ax
    vy = by - ay
    wx = px - ax
    wy = py - ay
    vv = vx * vx + vy * vy
    t = 0.0 if vv <= 0.0 else max(0.0, min(1.0, (wx * vx + wy * vy) / vv))
    return math.hypot(wx - t * vx, wy - t * vy)


def geodesic_distance(
    model: OctahedronModel,
    p: SurfacePoint,
    q: SurfacePoint,
    m_max: int = M_MAX_DEFAULT,
    check_convergence: bool = True,
) -> float:
    """Exact intrinsic distance between two surface points.

    Minimizes over developments of at most m_max faces; raises NotConverged
    when allowing one more face changes the result by more than EPS.
    """
    bundle = _cache_for(model).bundles(p.face, m_max + 1)[q.face]
    px, py = p.z.real, p.z.imag
    qxr, qyr = q.z.real, q.z.imag
    cand = bundle.cand
    ex = cand[:, 0] * qxr - cand[:, 1] * qyr + cand[:, 2]
    ey = cand[:, 0] * qyr + cand[:, 1] * qxr + cand[:, 3]
    dists = np.hypot(ex - px, ey - py)
    order = np.argsort(dists, kind="stable")
    best_full = math.inf
    best_shallow = math.inf
    for m in order:
        d = float(dists[m])
        if d >= best_shallow:
            # Candidates are visited in ascending distance; once a valid
            # development within m_max faces is seen, nothing can improve.
            break
        if not _gate_check(px, py, float(ex[m]), float(ey[m]),
                           bundle.gates, int(bundle.offsets[m]),
                           int(bundle.offsets[m + 1]), EPS):
            continue
        if d < best_full:
            best_full = d
        if bundle.nfaces[m] <= m_max and d < best_shallow:
            best_shallow = d
    if not math.isfinite(best_shallow):
        raise NotConverged(
            f"no admissible development within {m_max} faces for {p} -> {q}"
        )
    if check_convergence and best_shallow - best_full > EPS:
        raise NotConverged(
            f"distance unstable at depth {m_max}: {best_shallow} vs {best_full}"
        )
    return best_shallow


# ---------------------------------------------------------------------------
# Brute-force farthest-point oracle.
# ---------------------------------------------------------------------------

_GRIDS: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _chart_grid(h: float) -> tuple[np.ndarray, np.ndarray]:
    """Barycentric triangular grid of spacing <= h over the chart triangle."""
    n = max(1, math.ceil(math.sqrt(3.0) / h))
    if n not in _GRIDS:
        ii, jj = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
        mask = ii + jj <= n
        ii = ii[mask]
        jj = jj[mask]
        kk = n - ii - jj
        v0, v1, v2 = CHART_VERTICES
        zz = (ii * v0 + jj * v1 + kk * v2) / n
        _GRIDS[n] = (np.ascontiguousarray(zz.real), np.ascontiguousarray(zz.imag))
    return _GRIDS[n]


def _distance_field(model: OctahedronModel, p: SurfacePoint, tgt: int,
                    qx: np.ndarray, qy: np.ndarray, m_max: int) -> np.ndarray:
    bundle = _cache_for(model).bundles(p.face, m_max + 1)[tgt]
    return _kernels.min_unfold_distances(
        p.z.real, p.z.imag, bundle.cand, bundle.gates, bundle.offsets,
        qx, qy, EPS,
    )


def farthest_oracle(
    model: OctahedronModel,
    p: SurfacePoint,
    h: float = 0.01,
    m_max: int = M_MAX_DEFAULT,
) -> tuple[float, list[SurfacePoint]]:
    """Global maximum of the distance function from p, by grid search.

    Evaluates the geodesic distance on a triangular grid of spacing h over
    every face, seeds local peaks from the near-maximal grid points
    (greedy, minimum separation 2h), sharpens each seed by hill-climbing
    on local grids of spacing h/16 (patches developed across face edges),
    and merges refined peaks closer than 2h.  Returns the maximum value
    and the representatives whose refined value ties it within h/10,
    best first.
    """
    qx, qy = _chart_grid(h)
    values = []
    vmax = -math.inf
    for face in range(8):
        vals = _distance_field(model, p, face, qx, qy, m_max)
        values.append(vals)
        vmax = max(vmax, float(vals.max()))

    candidates = []
    for face in range(8):
        idx = np.nonzero(values[face] >= vmax - 1.2 * h)[0]
        emb = _embed_many(model, face, qx[idx], qy[idx])
        for row, i in enumerate(idx):
            candidates.append(
                (float(values[face][i]), face, float(qx[i]), float(qy[i]), emb[row])
            )
    candidates.sort(key=lambda t: -t[0])

    # Seed separation sits below the merge radius, which sits below the 2h
    # cluster scale, so nearly coincident maxima never straddle a threshold.
    seeds = []
    for v, face, x, y, pos in candidates:
        if all(np.linalg.norm(pos - s[4]) >= 1.5 * h for s in seeds):
            seeds.append((v, face, x, y, pos))
        if len(seeds) >= 8:
            break

    refined = []
    for v, face, x, y, _pos in seeds:
        rv, rface, rx, ry = _hill_climb(model, p, face, complex(x, y), v, h, m_max)
        pos = _embed_many(model, rface, np.array([rx]), np.array([ry]))[0]
        refined.append((rv, SurfacePoint(rface, complex(rx, ry)), pos))
    refined.sort(key=lambda t: -t[0])

    merged: list[tuple[float, SurfacePoint, np.ndarray]] = []
    for rv, sp, pos in refined:
        if all(np.linalg.norm(pos - m[2]) >= 1.8 * h for m in merged):
            merged.append((rv, sp, pos))

    best_value = merged[0][0]
    theta = 0.1 * h
    maximizers = [sp for rv, sp, _pos in merged if rv >= best_value - theta]
    return best_value, maximizers


def _embed_many(model: OctahedronModel, face: int,
                qx, qy) -> np.ndarray:
    """3-space positions for clustering (chord distance ~ surface distance)."""
    qx = np.atleast_1d(np.asarray(qx, dtype=float))
    qy = np.atleast_1d(np.asarray(qy, dtype=float))
    rec = model.faces[face]
    a, b, c = CHART_VERTICES
    denom = (b - a).real * (c - a).imag - (b - a).imag * (c - a).real
    zx = qx - a.real
    zy = qy - a.imag
    l1 = (zx * (c - a).imag - zy * (c - a).real) / denom
    l2 = ((b - a).real * zy - (b - a).imag * zx) / denom
    l0 = 1.0 - l1 - l2
    lam = (l0, l1, l2)
    out = np.zeros((qx.shape[0], 3))
    scale = math.sqrt(1.5)
    for k, (axis, sign) in enumerate(rec.oct_vertices):
        out[:, axis] += lam[k] * sign * scale
    return out


_PATCH_OFFSETS: dict[float, np.ndarray] = {}


def _patch_offsets(h: float) -> np.ndarray:
    """Fine triangular lattice offsets covering a disk of radius 2h."""
    if h not in _PATCH_OFFSETS:
        s = h / 16.0
        r = 2.0 * h
        m = math.ceil(r / s) + 1
        ii, jj = np.meshgrid(np.arange(-m, m + 1), np.arange(-m, m + 1), indexing="ij")
        ox = (ii + 0.5 * jj) * s
        oy = (math.sqrt(3.0) / 2.0 * jj) * s
        mask = ox * ox + oy * oy <= r * r
        _PATCH_OFFSETS[h] = (ox[mask] + 1j * oy[mask]).ravel()
    return _PATCH_OFFSETS[h]


def _refine_once(model, p, face: int, center: complex, h: float, m_max: int):
    """Max of the distance field over a fine patch around (face, center).

    The patch disk is developed into every face reachable within two edge
    crossings so maxima sitting across an edge or around a chart corner are
    still sampled; every evaluated (face, point) pair is a genuine surface
    point, so over-covering is harmless.
    """
    pts = center + _patch_offsets(h)
    best = (-math.inf, face, center.real, center.imag)
    for tgt, bundle in _cache_for(model).bundles(face, 3).items():
        for m in range(bundle.cand.shape[0]):
            wx, wy, cx, cy = bundle.cand[m]
            w = complex(wx, wy)
            c = complex(cx, cy)
            local = (pts - c) * w.conjugate()  # inverse development
            lam0, lam1, lam2 = _barycentric_many(local)
            inside = (lam0 >= -1e-12) & (lam1 >= -1e-12) & (lam2 >= -1e-12)
            if not inside.any():
                continue
            qx = np.ascontiguousarray(local.real[inside])
            qy = np.ascontiguousarray(local.imag[inside])
            vals = _distance_field(model, p, tgt, qx, qy, m_max)
            i = int(vals.argmax())
            if vals[i] > best[0]:
                best = (float(vals[i]), tgt, float(qx[i]), float(qy[i]))
    return best


def _barycentric_many(z: np.ndarray):
    a, b, c = CHART_VERTICES
    denom = (b - a).real * (c - a).imag - (b - a).imag * (c - a).real
    zx = z.real - a.real
    zy = z.imag - a.imag
    l1 = (zx * (c - a).imag - zy * (c - a).real) / denom
    l2 = ((b - a).real * zy - (b - a).imag * zx) / denom
    return 1.0 - l1 - l2, l1, l2


def _hill_climb(model, p, face: int, center: complex, value: float,
                h: float, m_max: int):
    """Iterated local refinement; follows shallow ridges across patches."""
    best = (value, face, center.real, center.imag)
    for _ in range(6):
        cand = _refine_once(model, p, best[1], complex(best[2], best[3]), h, m_max)
        if cand[0] <= best[0] + 1e-13:
            if cand[0] > best[0]:
                best = cand
            break
        best = cand
    return best
