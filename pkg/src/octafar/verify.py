"""Batch verification suite: every primary acceptance check, with its
tolerance pinned, runnable as a whole (full) or with reduced sample
counts (quick).  Each check reports the measured error against its
tolerance; the suite passes iff every check passes.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

import numpy as np

from . import dynamics, farmap, hexagon, svgfig, unfolding
from .jsonfmt import canonical_dumps, format_float
from .planar import SQRT3, circumcenter
from .schema import build_point_response
from .surface import SurfacePoint, antipode, build_model

_SEED = 20260810


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    seconds: float
    detail: str = ""


@dataclass
class VerifyReport:
    results: list[CheckResult]
    quick: bool
    total_seconds: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_payload(self) -> dict:
        return {
            "schema_version": 1,
            "quick": self.quick,
            "passed": self.passed,
            "total_seconds": float(self.total_seconds),
            "checks": [
                {
                    "name": r.name,
                    "passed": r.passed,
                    "measured": float(r.measured),
                    "tolerance": float(r.tolerance),
                    "seconds": float(r.seconds),
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }


def _sample_T(rng: random.Random, margin: float = 0.0) -> complex:
    a = margin + (1.0 - 2.0 * margin) * rng.random()
    b = margin + (1.0 - 2.0 * margin) * rng.random()
    return hexagon.phi(a, b)


def _sample_T_away_from_J(rng: random.Random, min_dist: float) -> complex:
    while True:
        p = _sample_T(rng, margin=1e-3)
        if farmap.dist_to_j(p) > min_dist:
            return p


def _embed_dist(model, a: SurfacePoint, b: SurfacePoint) -> float:
    return float(
        np.linalg.norm(np.array(model.embed(a)) - np.array(model.embed(b)))
    )


def check_cone_diameter(model, quick: bool) -> CheckResult:
    t0 = time.time()
    d = unfolding.geodesic_distance(
        model, SurfacePoint(0, 1 + 0j), SurfacePoint(7, 1 + 0j)
    )
    err = abs(d - 3.0)
    return CheckResult(
        "1_cone_diameter", err < 1e-9, err, 1e-9, time.time() - t0,
        f"d = {d!r}",
    )


def check_oracle_agreement(model, quick: bool) -> CheckResult:
    t0 = time.time()
    n = 20 if quick else 200
    h = 0.01
    rng = random.Random(_SEED + 2)
    worst = 0.0
    detail = ""
    ok = True
    for _ in range(n):
        p = _sample_T_away_from_J(rng, 0.01)
        # Predict directly through the closed-form map: the farthest point
        # is the antipodal image of f(p), at distance mu_p of the vertex
        # developing to f(p).
        f_img = farmap.apply_f(p)
        predicted_point = antipode(SurfacePoint(0, f_img))
        predicted_value = hexagon.mu(p, hexagon.alpha0_inv(f_img))
        value, maxers = unfolding.farthest_oracle(model, SurfacePoint(0, p), h=h)
        pos_err = _embed_dist(model, maxers[0], predicted_point)
        val_err = abs(value - predicted_value)
        worst = max(worst, pos_err, val_err)
        if len(maxers) != 1 or pos_err > 2 * h or val_err > 2 * h:
            ok = False
            detail = f"failed at p = {p!r}: clusters={len(maxers)}"
    return CheckResult(
        "2_oracle_agreement", ok, worst, 2 * h, time.time() - t0, detail,
    )


def check_two_valued_locus(model, quick: bool) -> CheckResult:
    t0 = time.time()
    n = 10 if quick else 50
    h = 0.01
    r = farmap.root_r()
    worst_mu = 0.0
    worst_pos = 0.0
    ok = True
    detail = ""
    for i in range(n):
        x = r + (i + 0.5) * (0.25 - r) / n
        p = complex(x, farmap.curve_j(x))
        res = farmap.farpoint_set(p)
        mu_gap = abs(
            hexagon.mu(p, res.chart_points[0]) - hexagon.mu(p, res.chart_points[1])
        )
        worst_mu = max(worst_mu, mu_gap)
        value, maxers = unfolding.farthest_oracle(model, SurfacePoint(0, p), h=h)
        top2 = maxers[:2]
        for pt in res.points:
            d = min(_embed_dist(model, pt, mx) for mx in top2)
            worst_pos = max(worst_pos, d)
            if d > 2 * h:
                ok = False
                detail = f"bracket miss at x = {x!r}"
        if mu_gap >= 1e-9:
            ok = False
            detail = f"mu gap {mu_gap} at x = {x!r}"
    return CheckResult(
        "3_two_valued_locus", ok, max(worst_mu, worst_pos), 2 * h,
        time.time() - t0, detail,
    )


def check_gh_certificates(model, quick: bool) -> CheckResult:
    t0 = time.time()
    err_half = abs(farmap.eval_g(0.5 + 0j) + 1.0 / 3.0)
    ok = err_half < 1e-12
    detail = "" if ok else f"G(1/2) error {err_half}"

    r = farmap.root_r()
    n_j = 25 if quick else 100
    worst_h = 0.0
    for i in range(n_j):
        x = r + (i + 0.5) * (0.25 - 1e-6 - r) / n_j
        worst_h = max(worst_h, abs(farmap.eval_h(complex(x, farmap.curve_j(x)))))
    n_b = 14 if quick else 50
    for i in range(n_b):
        t = (i + 0.5) / n_b
        left = complex(0.25 * t, 0.25 * SQRT3 * t)
        right = complex(1.0 - 0.75 * t, 0.25 * SQRT3 * t)
        worst_h = max(worst_h, abs(farmap.eval_h(left)), abs(farmap.eval_h(right)))
    if worst_h >= 1e-9:
        ok = False
        detail = f"|H| = {worst_h} on J / boundary samples"

    n_grid = 20 if quick else 60
    sign_fails = 0
    for i in range(n_grid):
        x = (i + 0.5) / n_grid
        ymax = min(SQRT3 * x, (1.0 - x) / SQRT3)
        for j in range(n_grid):
            y = (j + 0.5) / n_grid * ymax
            p = complex(x, y)
            if farmap.dist_to_j(p) <= 0.01:
                continue
            g = farmap.eval_g(p)
            left_of_j = x < farmap.curve_j_x_at_height(y)
            if (g > 0.0) != left_of_j:
                sign_fails += 1
    if sign_fails:
        ok = False
        detail = f"{sign_fails} G-sign mismatches on the grid"
    return CheckResult(
        "4_gh_certificates", ok, max(err_half, worst_h), 1e-9,
        time.time() - t0, detail,
    )


def check_factorizations(model, quick: bool) -> CheckResult:
    t0 = time.time()
    n = 20 if quick else 50
    worst = 0.0
    ok = True
    detail = ""
    for i in range(n):
        a = (i + 0.5) / n
        for j in range(n):
            b = (j + 0.5) / n
            sv = hexagon.stability_functions(a, b)
            worst = max(
                worst,
                abs(sv.t0125[0] - sv.t0125[1]),
                abs(sv.t2345[0] - sv.t2345[1]),
                abs(sv.t0235[0] - sv.t0235[1]),
            )
            if sv.nu1 <= 0.0 or sv.nu2 <= 0.0:
                ok = False
                detail = f"nu not positive at ({a}, {b})"
    if worst >= 1e-9:
        ok = False
        detail = f"chi/factored gap {worst}"
    anchored = hexagon.stability_functions(0.5, 0.5).t0235[1]
    if anchored != 3.0:
        ok = False
        detail = f"T0235(1/2,1/2) factored = {anchored!r}"
    return CheckResult(
        "5_factorization_identities", ok, worst, 1e-9, time.time() - t0, detail,
    )


def check_essential_vertices(model, quick: bool) -> CheckResult:
    t0 = time.time()
    n = 100 if quick else 500
    rng = random.Random(_SEED + 6)
    worst_cc = 0.0
    worst_margin = math.inf
    ok = True
    detail = ""
    for _ in range(n):
        p = _sample_T(rng, margin=1e-3)
        hexa = hexagon.hexagon(p)
        verts = hexa.vertices
        mus = {}
        for label in hexagon.ESSENTIAL_LABELS:
            i, j, k = (int(c) for c in label)
            cc = circumcenter(verts[i], verts[j], verts[k])
            closed = hexagon.essential_closed_form(label, p)
            worst_cc = max(worst_cc, abs(cc - closed))
            worst_margin = min(worst_margin, hexagon.a0_interior_margin(closed))
            mus[label] = hexa.mu(closed)
        if abs(mus["012"] - mus["025"]) > 1e-9 and mus["012"] >= mus["025"]:
            ok = False
            detail = f"competition (012) vs (025) at p = {p!r}"
        if abs(mus["345"] - mus["235"]) > 1e-9 and mus["345"] >= mus["235"]:
            ok = False
            detail = f"competition (345) vs (235) at p = {p!r}"
    if worst_cc >= 1e-9:
        ok = False
        detail = f"closed form vs circumcenter gap {worst_cc}"
    if worst_margin <= -1e-9:
        ok = False
        detail = f"essential vertex outside A0 by {worst_margin}"
    return CheckResult(
        "6_essential_vertices", ok, worst_cc, 1e-9, time.time() - t0, detail,
    )


def check_hexagon_plan_bridge(model, quick: bool) -> CheckResult:
    t0 = time.time()
    n = 60 if quick else 500
    rng = random.Random(_SEED + 7)
    worst = 0.0
    for _ in range(n):
        p = _sample_T(rng, margin=1e-3)
        u, v = rng.random(), rng.random()
        if u + v > 1.0:
            u, v = 1.0 - u, 1.0 - v
        a0 = hexagon.A0_VERTICES
        q = a0[0] + u * (a0[1] - a0[0]) + v * (a0[2] - a0[0])
        mu_val = hexagon.mu(p, q)
        d = unfolding.geodesic_distance(model, SurfacePoint(0, p), hexagon.psi(q))
        worst = max(worst, abs(mu_val - d))
    return CheckResult(
        "7_hexagon_plan_bridge", worst < 1e-8, worst, 1e-8, time.time() - t0,
    )


def check_dynamics(model, quick: bool) -> CheckResult:
    t0 = time.time()
    ok = True
    detail = ""
    worst = 0.0
    n_h = 50
    for i in range(n_h):
        y = SQRT3 / 4.0 * i / n_h
        left = dynamics.lft_for_line(y, "left")
        right = dynamics.lft_for_line(y, "right")
        comp = left.compose(right)
        scale = comp.a
        rel = max(abs(comp.b), abs(comp.c), abs(comp.d - scale)) / abs(scale)
        worst = max(worst, rel)
    if worst >= 1e-9:
        ok = False
        detail = f"branch composition rel err {worst}"
    for i in range(100):
        y = SQRT3 / 4.0 * i / 100
        for branch in ("left", "right"):
            _x0, mult = dynamics.boundary_fixed_point(y, branch)
            if abs(mult) >= 1.0:
                ok = False
                detail = f"multiplier {mult} at y = {y}"

    orb = dynamics.orbit(0.5 + 0j, max_iter=3, tol=1e-15)
    expected = ["0.5", "0.666666667", "0.8", "0.888888889"]
    got = [format_float(z.real) for z in orb.points]
    if got != expected:
        ok = False
        detail = f"printed orbit {got}"

    n_orbits = 25 if quick else 100
    rng = random.Random(_SEED + 8)
    for _ in range(n_orbits):
        p = _sample_T_away_from_J(rng, 0.01)
        o = dynamics.orbit(p, max_iter=200, tol=1e-6)
        if o.terminated_by is not dynamics.Termination.CONVERGED:
            ok = False
            detail = f"orbit from {p!r} did not converge"
        elif dynamics.limit_set_distance(o.last) > 1e-5:
            ok = False
            detail = f"orbit limit off the boundary at {o.last!r}"
    return CheckResult("8_dynamics", ok, worst, 1e-9, time.time() - t0, detail)


def check_root_and_curve(model, quick: bool) -> CheckResult:
    t0 = time.time()
    r = farmap.root_r()
    residual = abs(((r - 1.0) * r - 4.0) * r + 1.0)
    anchor = abs(r - 0.239123)
    j_at_r = abs(farmap.curve_j(r))
    ok = residual < 1e-13 and anchor <= 5e-7 and j_at_r < 1e-10
    return CheckResult(
        "9_root_and_curve", ok, max(residual, j_at_r), 1e-10, time.time() - t0,
        f"r = {r!r}",
    )


def check_determinism(model, quick: bool) -> CheckResult:
    t0 = time.time()
    ok = True
    detail = ""
    for fig_id in svgfig.FIGURE_IDS:
        spec = svgfig.FigureSpec(fig_id, {"samples": 60, "k_max": 5})
        if svgfig.render(spec) != svgfig.render(spec):
            ok = False
            detail = f"figure {fig_id} not byte-stable"
    a = canonical_dumps(build_point_response(model, 0, 0.5, 0.0, orbit_n=5))
    b = canonical_dumps(build_point_response(model, 0, 0.5, 0.0, orbit_n=5))
    if a != b:
        ok = False
        detail = "point response not byte-stable"
    return CheckResult("10_determinism", ok, 0.0, 0.0, time.time() - t0, detail)


ALL_CHECKS = (
    check_cone_diameter,
    check_oracle_agreement,
    check_two_valued_locus,
    check_gh_certificates,
    check_factorizations,
    check_essential_vertices,
    check_hexagon_plan_bridge,
    check_dynamics,
    check_root_and_curve,
    check_determinism,
)


def run_all(quick: bool = False, model=None) -> VerifyReport:
    model = model or build_model()
    t0 = time.time()
    results = [check(model, quick) for check in ALL_CHECKS]
    return VerifyReport(results, quick, time.time() - t0)


def format_report(report: VerifyReport) -> str:
    lines = []
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"{status}  {r.name:<28} measured={format_float(r.measured)} "
            f"tol={format_float(r.tolerance)} ({r.seconds:.2f}s)"
            + (f"  [{r.detail}]" if r.detail and not r.passed else "")
        )
    overall = "PASS" if report.passed else "FAIL"
    mode = "quick" if report.quick else "full"
    lines.append(
        f"{overall}  overall ({mode} mode, {report.total_seconds:.1f}s)"
    )
    return "\n".join(lines)
