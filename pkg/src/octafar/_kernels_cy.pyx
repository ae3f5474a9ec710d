# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled unfolding-distance kernel.

Mirrors octafar._kernels_py.min_unfold_distances decision-for-decision;
the numpy module is the reference implementation.
"""

from libc.math cimport fabs, sqrt, INFINITY

import numpy as np

BACKEND = "cython"

cdef double _PAR_REL = 1e-12
cdef double _TINY = 1e-300


cdef inline double _seg_dist(double px, double py, double ax, double ay,
                             double bx, double by) nogil:
    cdef double vx = bx - ax
    cdef double vy = by - ay
    cdef double wx = px - ax
    cdef double wy = py - ay
    cdef double vv = vx * vx + vy * vy
    cdef double t
    if vv <= 0.0:
        t = 0.0
    else:
        t = (wx * vx + wy * vy) / vv
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
    cdef double dx = wx - t * vx
    cdef double dy = wy - t * vy
    return sqrt(dx * dx + dy * dy)


def min_unfold_distances(double px, double py,
                         double[:, ::1] cand,
                         double[:, ::1] gates,
                         long long[::1] offsets,
                         double[::1] qx,
                         double[::1] qy,
                         double eps):
    """Minimum admissible unfolded distance per query point (inf if none)."""
    cdef Py_ssize_t n = qx.shape[0]
    cdef Py_ssize_t m_count = cand.shape[0]
    out_arr = np.full(n, np.inf)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i, m, g
    cdef double wx, wy, cx, cy, ex, ey, dx, dy, dist, length2, t_tol, t_prev
    cdef double ax, ay, bx, by, gx, gy, glen, u_tol, rx, ry
    cdef double cross_rg, line_dist, denom, t, u, ta, tb, lo, hi, l2_safe, sd
    cdef double best
    cdef bint ok, zero_len

    with nogil:
        for i in range(n):
            best = INFINITY
            for m in range(m_count):
                wx = cand[m, 0]
                wy = cand[m, 1]
                cx = cand[m, 2]
                cy = cand[m, 3]
                ex = wx * qx[i] - wy * qy[i] + cx
                ey = wx * qy[i] + wy * qx[i] + cy
                dx = ex - px
                dy = ey - py
                dist = sqrt(dx * dx + dy * dy)
                if dist >= best:
                    continue
                length2 = dx * dx + dy * dy
                t_tol = eps / (dist if dist > eps else eps)
                t_prev = 0.0
                zero_len = length2 < (eps * 1e-3) * (eps * 1e-3)
                ok = True
                for g in range(offsets[m], offsets[m + 1]):
                    ax = gates[g, 0]
                    ay = gates[g, 1]
                    bx = gates[g, 2]
                    by = gates[g, 3]
                    gx = bx - ax
                    gy = by - ay
                    glen = sqrt(gx * gx + gy * gy)
                    u_tol = eps / glen
                    rx = ax - px
                    ry = ay - py
                    cross_rg = rx * gy - ry * gx
                    line_dist = fabs(cross_rg) / glen
                    denom = dx * gy - dy * gx
                    if fabs(denom) <= _PAR_REL * glen * (fabs(dx) + fabs(dy)) + _TINY:
                        if zero_len:
                            sd = _seg_dist(px, py, ax, ay, bx, by)
                            ok = sd <= eps
                        else:
                            l2_safe = length2 if length2 > _TINY else _TINY
                            ta = (rx * dx + ry * dy) / l2_safe
                            tb = ((bx - px) * dx + (by - py) * dy) / l2_safe
                            lo = ta if ta < tb else tb
                            hi = tb if ta < tb else ta
                            ok = (line_dist <= eps and hi >= t_prev - t_tol
                                  and lo <= 1.0 + t_tol)
                            if ok:
                                if lo > 1.0:
                                    lo = 1.0
                                if lo > t_prev:
                                    t_prev = lo
                        if not ok:
                            break
                    else:
                        t = cross_rg / denom
                        u = (rx * dy - ry * dx) / denom
                        ok = (t >= t_prev - t_tol and t <= 1.0 + t_tol
                              and u >= -u_tol and u <= 1.0 + u_tol)
                        if not ok:
                            break
                        if t > t_prev:
                            t_prev = t
                if ok and dist < best:
                    best = dist
            out[i] = best
    return out_arr
