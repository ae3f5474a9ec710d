"""Numpy implementation of the unfolding-distance kernel.

Given one source point and a batch of query points in a fixed target
face, every unfolding candidate contributes the straight-line distance
from the source to the developed query, admitted only when the segment
crosses the candidate's developed gate edges in order.  The compiled
Cython kernel mirrors this logic decision-for-decision; keep the two in
sync (parity is enforced by tests).
"""

from __future__ import annotations

import numpy as np

# Relative threshold below which a segment/gate pair counts as parallel.
_PAR_REL = 1e-12
_TINY = 1e-300

BACKEND = "python"


def min_unfold_distances(
    px: float,
    py: float,
    cand: np.ndarray,      # (M, 4) float64: wx, wy, cx, cy of chart->source-plane map
    gates: np.ndarray,     # (G, 4) float64: ax, ay, bx, by in the source plane
    offsets: np.ndarray,   # (M + 1,) int64 gate ranges per candidate
    qx: np.ndarray,        # (N,) float64 query x in the target chart
    qy: np.ndarray,        # (N,) float64 query y
    eps: float,
) -> np.ndarray:
    """Minimum admissible unfolded distance per query point (inf if none)."""
    n = qx.shape[0]
    best = np.full(n, np.inf)
    for m in range(cand.shape[0]):
        wx, wy, cx, cy = cand[m]
        ex = wx * qx - wy * qy + cx
        ey = wx * qy + wy * qx + cy
        dx = ex - px
        dy = ey - py
        dist = np.hypot(dx, dy)
        valid = dist < best
        if not valid.any():
            continue
        length2 = dx * dx + dy * dy
        length = dist
        t_tol = eps / np.maximum(length, eps)
        t_prev = np.zeros(n)
        zero_len = length2 < (eps * 1e-3) ** 2
        for g in range(offsets[m], offsets[m + 1]):
            ax, ay, bx, by = gates[g]
            gx = bx - ax
            gy = by - ay
            glen = np.hypot(gx, gy)
            u_tol = eps / glen
            rx = ax - px
            ry = ay - py
            cross_rg = rx * gy - ry * gx          # scalar
            line_dist = abs(cross_rg) / glen      # source-to-gate-line distance
            denom = dx * gy - dy * gx
            par = np.abs(denom) <= _PAR_REL * glen * (np.abs(dx) + np.abs(dy)) + _TINY
            denom_safe = np.where(par, 1.0, denom)
            t = cross_rg / denom_safe
            u = (rx * dy - ry * dx) / denom_safe
            ok_gen = (
                (t >= t_prev - t_tol)
                & (t <= 1.0 + t_tol)
                & (u >= -u_tol)
                & (u <= 1.0 + u_tol)
            )
            # Parallel branch: grazing along the gate line; require overlap of
            # the gate's projection interval with the remaining path.
            l2_safe = np.maximum(length2, _TINY)
            ta = (rx * dx + ry * dy) / l2_safe
            tb = ((bx - px) * dx + (by - py) * dy) / l2_safe
            lo = np.minimum(ta, tb)
            hi = np.maximum(ta, tb)
            ok_par = (line_dist <= eps) & (hi >= t_prev - t_tol) & (lo <= 1.0 + t_tol)
            # Degenerate zero-length path: the source must sit on the gate.
            seg_dist = _point_segment_distance(px, py, ax, ay, bx, by)
            ok_zero = seg_dist <= eps
            ok = np.where(par, np.where(zero_len, ok_zero, ok_par), ok_gen)
            t_next = np.where(par, np.maximum(t_prev, np.minimum(lo, 1.0)), np.maximum(t_prev, t))
            valid &= ok
            if not valid.any():
                break
            t_prev = np.where(ok, t_next, t_prev)
        best = np.where(valid, np.minimum(best, dist), best)
    return best


def _point_segment_distance(px, py, ax, ay, bx, by) -> float:
    vx = bx - ax
    vy = by - ay
    wx = px - ax
    wy = py - ay
    vv = vx * vx + vy * vy
    t = 0.0 if vv <= 0.0 else max(0.0, min(1.0, (wx * vx + wy * vy) / vv))
    dx = wx - t * vx
    dy = wy - t * vy
    return float(np.hypot(dx, dy))
