import math
import random

import pytest

from conftest import sample_T
from octafar.hexagon import (
    A0_VERTICES,
    ESSENTIAL_LABELS,
    SharpVertexDegenerate,
    TranslationPair,
    UNFOLD_ISOMETRIES,
    a0_interior_margin,
    alpha0,
    alpha0_inv,
    essential_closed_form,
    hexagon,
    hexagon_boundary_distance,
    mu,
    phi,
    rotation_center,
    stability_functions,
    voronoi,
)
from octafar.planar import EPS, circumcenter, cross
from octafar.surface import CHART_VERTICES

S3 = math.sqrt(3)


def test_unfold_isometry_translations():
    assert UNFOLD_ISOMETRIES[0](0j) == 0j
    assert abs(UNFOLD_ISOMETRIES[1](0j) - complex(1.5, -S3 / 2)) < EPS
    assert abs(UNFOLD_ISOMETRIES[5](0j) - complex(0.0, 2 * S3)) < EPS


def test_a0_vertices_and_alpha0():
    expected = (complex(2.5, 1.5 * S3), complex(2.5, S3 / 2), complex(1.0, S3))
    for got, want in zip(A0_VERTICES, expected):
        assert abs(got - want) < EPS
    # alpha0 carries the A0 corners onto the chart corners.
    for v in A0_VERTICES:
        img = alpha0(v)
        assert min(abs(img - u) for u in CHART_VERTICES) < EPS
    # and alpha0_inv really inverts it
    for u in CHART_VERTICES:
        assert abs(alpha0(alpha0_inv(u)) - u) < EPS


def test_hexagon_vertex_formulas():
    hexa = hexagon(0j)
    assert abs(hexa.vertices[2] - complex(4.5, S3 / 2)) < EPS
    hexa = hexagon(0.5 + 0j)
    assert abs(hexa.vertices[2] - complex(4.25, S3 / 4)) < EPS


def test_hexagon_rejects_sharp_vertex():
    with pytest.raises(SharpVertexDegenerate):
        hexagon(1 + 0j)


def test_hexagon_is_strictly_convex():
    rng = random.Random(23)
    for _ in range(200):
        p = sample_T(rng, margin=1e-6)
        verts = hexagon(p).vertices
        for i in range(6):
            a, b, c = verts[i - 1], verts[i], verts[(i + 1) % 6]
            assert cross(b - a, c - b) > -EPS  # inner angle below pi


def test_mu_examples():
    hexa = hexagon(0.3 + 0.1j)
    assert hexa.mu(hexa.vertices[0]) == 0.0
    assert abs(mu(0j, complex(2.0, S3)) - math.sqrt(7)) < 10 * EPS


def test_essential_closed_forms_against_spot_values():
    assert abs(essential_closed_form("025", 0j) - complex(2.0, S3)) < 10 * EPS
    got = essential_closed_form("025", 0.5 + 0j)
    assert abs(got - complex(13 / 6, 7 * S3 / 6)) < 10 * EPS
    got = essential_closed_form("235", 0.5 + 0j)
    assert abs(got - complex(7 / 3, 4 * S3 / 3)) < 10 * EPS


def test_closed_forms_match_circumcenters():
    rng = random.Random(29)
    for _ in range(200):
        p = sample_T(rng, margin=1e-3)
        verts = hexagon(p).vertices
        for label in ESSENTIAL_LABELS:
            i, j, k = (int(c) for c in label)
            cc = circumcenter(verts[i], verts[j], verts[k])
            assert abs(cc - essential_closed_form(label, p)) < 10 * EPS


def test_essential_vertices_equidistant_from_their_sites():
    rng = random.Random(30)
    for _ in range(500):
        p = sample_T(rng)
        if abs(p - (1 + 0j)) < 1e-6:
            continue
        verts = hexagon(p).vertices
        for label in ESSENTIAL_LABELS:
            v = essential_closed_form(label, p)
            ds = [abs(v - verts[int(c)]) for c in label]
            assert max(ds) - min(ds) < 10 * EPS


def test_essential_vertices_inside_a0_off_long_edge():
    rng = random.Random(33)
    for _ in range(300):
        p = sample_T(rng, margin=1e-3)
        for label in ESSENTIAL_LABELS:
            margin = a0_interior_margin(essential_closed_form(label, p))
            assert margin > -EPS


def test_competition_ordering():
    rng = random.Random(37)
    for _ in range(300):
        p = sample_T(rng, margin=1e-3)
        hexa = hexagon(p)
        m = {lab: hexa.mu(essential_closed_form(lab, p)) for lab in ESSENTIAL_LABELS}
        v = {lab: essential_closed_form(lab, p) for lab in ESSENTIAL_LABELS}
        if abs(v["012"] - v["025"]) > EPS:
            assert m["012"] < m["025"]
        if abs(v["345"] - v["235"]) > EPS:
            assert m["345"] < m["235"]


def test_mu_max_over_a0_attained_at_essential_vertices():
    # Any non-vertex point of A0 admits a strictly better point.
    rng = random.Random(39)
    for _ in range(20):
        p = sample_T(rng, margin=1e-2)
        hexa = hexagon(p)
        best_ev = max(
            hexa.mu(essential_closed_form(lab, p)) for lab in ESSENTIAL_LABELS
        )
        n = 40
        worst = -1.0
        a0, a1, a2 = A0_VERTICES
        for i in range(n + 1):
            for j in range(n + 1 - i):
                q = a0 + (a1 - a0) * i / n + (a2 - a0) * j / n
                worst = max(worst, hexa.mu(q))
        assert worst <= best_ev + 1e-9


def test_voronoi_four_distinct_essential_vertices_in_interior():
    rng = random.Random(41)
    for _ in range(50):
        p = sample_T(rng, margin=1e-2)
        cells, essential = voronoi(p)
        assert len(cells) == 6
        assert sorted(ev.label for ev in essential) == list(ESSENTIAL_LABELS)


def test_voronoi_cells_have_two_boundary_edges():
    rng = random.Random(43)
    for _ in range(25):
        p = sample_T(rng, margin=1e-2)
        hexa = hexagon(p)
        cells, _ = voronoi(p)
        for cell in cells:
            poly = cell.polygon
            n = len(poly)
            count = 0
            for i in range(n):
                a, b = poly[i], poly[(i + 1) % n]
                mid = 0.5 * (a + b)
                on_boundary = (
                    hexagon_boundary_distance(hexa, a) < 100 * EPS
                    and hexagon_boundary_distance(hexa, b) < 100 * EPS
                    and hexagon_boundary_distance(hexa, mid) < 100 * EPS
                )
                if on_boundary:
                    count += 1
            assert count == 2, f"cell {cell.index} at p={p}"


def _polygon_area(poly) -> float:
    area2 = 0.0
    n = len(poly)
    for i in range(n):
        area2 += cross(poly[i], poly[(i + 1) % n])
    return abs(area2) / 2.0


def test_voronoi_cells_partition_hexagon():
    rng = random.Random(61)
    for _ in range(25):
        p = sample_T(rng, margin=1e-2)
        hexa = hexagon(p)
        cells, _ = voronoi(p)
        total = sum(_polygon_area(c.polygon) for c in cells)
        assert total == pytest.approx(_polygon_area(hexa.vertices), abs=1e-8)


def test_voronoi_cells_contain_their_nearest_points():
    # Random points of H_p land in the cell of their minimal index.
    rng = random.Random(67)
    for _ in range(10):
        p = sample_T(rng, margin=1e-2)
        hexa = hexagon(p)
        cells, _ = voronoi(p)
        verts = hexa.vertices
        for _ in range(50):
            w = [rng.random() for _ in range(6)]
            s = sum(w)
            q = sum(wi / s * v for wi, v in zip(w, verts))
            j = min(range(6), key=lambda k: abs(q - verts[k]))
            poly = cells[j].polygon
            n = len(poly)
            inside = all(
                cross(poly[(i + 1) % n] - poly[i], q - poly[i]) > -1e-7
                for i in range(n)
            )
            assert inside


def test_voronoi_merge_on_long_edge():
    # Probes on the long non-horizontal side of T: (025) = (235) on the open
    # A0 edge between the rotation centers, and (012), (345) collapse onto
    # the centers themselves.
    for t in (0.2, 0.5, 0.8):
        p = complex(1.0, 0.0) + t * (complex(0.25, S3 / 4) - complex(1.0, 0.0))
        cells, essential = voronoi(p)
        labels = sorted(ev.label for ev in essential)
        assert labels == ["012", "0235", "345"]
        by_label = {ev.label: ev.location for ev in essential}
        assert abs(by_label["012"] - rotation_center(1, 2)) < 100 * EPS
        assert abs(by_label["345"] - rotation_center(3, 4)) < 100 * EPS
        merged = by_label["0235"]
        # Interior of the A0 edge x = 5/2 between the two centers.
        assert abs(merged.real - 2.5) < 100 * EPS
        assert S3 / 2 + 1e-3 < merged.imag < 1.5 * S3 - 1e-3


def test_essential_merge_on_short_edge():
    # Probes on the short non-horizontal side also merge (025) with (235).
    for t in (0.3, 0.6, 0.9):
        p = t * complex(0.25, S3 / 4)
        _, essential = voronoi(p)
        labels = {ev.label for ev in essential}
        assert any("2" in lab and "5" in lab and len(lab) >= 4 for lab in labels)


def test_phi_examples():
    assert phi(0, 0) == 0j
    assert abs(phi(0, 1) - complex(0.25, S3 / 4)) < EPS
    for b in (0.0, 0.3, 1.0):
        assert abs(phi(1, b) - (1 + 0j)) < EPS


def test_stability_t0235_spot_value():
    sv = stability_functions(0.5, 0.5)
    assert sv.t0235[1] == 3.0
    assert abs(sv.t0235[0] - 3.0) < 1e-9


def test_stability_vanishes_on_bottom_edge_for_0125():
    for a in (0.1, 0.5, 0.9):
        sv = stability_functions(a, 0.0)
        assert abs(sv.t0125[0]) < 1e-12
        assert sv.t0125[1] == 0.0


def test_stability_bottom_edge_t0235_nonzero():
    for a in (0.1, 0.5, 0.9):
        sv = stability_functions(a, 0.0)
        assert abs(sv.t0235[1]) > 1e-3


def test_stability_two_routes_agree_and_nu_positive():
    n = 50
    for i in range(n):
        for j in range(n):
            a, b = (i + 0.5) / n, (j + 0.5) / n
            sv = stability_functions(a, b)
            assert abs(sv.t0125[0] - sv.t0125[1]) < 1e-9
            assert abs(sv.t2345[0] - sv.t2345[1]) < 1e-9
            assert abs(sv.t0235[0] - sv.t0235[1]) < 1e-9
            assert sv.nu1 > 0 and sv.nu2 > 0
            # Observed signs on the open square (non-vanishing is the claim).
            assert sv.t0125[1] < 0 and sv.t2345[1] > 0 and sv.t0235[1] > 0


def test_rotation_center_translation_pairs():
    for j in range(6):
        with pytest.raises(TranslationPair):
            rotation_center(j, (j + 3) % 6)


def test_rotation_angle_is_120_degrees():
    comp = UNFOLD_ISOMETRIES[0].compose(UNFOLD_ISOMETRIES[1].invert())
    angle = abs(comp.rotation_angle())
    assert angle == pytest.approx(2 * math.pi / 3, abs=1e-12)


def test_rotation_centers_are_a0_corners():
    assert abs(rotation_center(3, 4) - A0_VERTICES[0]) < 10 * EPS
    assert abs(rotation_center(1, 2) - A0_VERTICES[1]) < 10 * EPS
    assert abs(rotation_center(0, 5) - A0_VERTICES[2]) < 10 * EPS


def test_cocircularity_matches_scaled_t0125():
    # Direct evaluation of the cross-ratio certificate against the factored
    # polynomial at the reference parameters.
    from octafar.planar import cocircularity

    a = b = 0.5
    p = phi(a, b)
    verts = hexagon(p).vertices
    chi = cocircularity(verts[0], verts[1], verts[2], verts[5])
    factored = stability_functions(a, b).t0125[1]
    assert abs(chi - 27 * S3 / 16 * factored) < 1e-9
