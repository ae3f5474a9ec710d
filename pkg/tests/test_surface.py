import math
import random
from collections import Counter

import pytest

from conftest import sample_surface
from octafar.planar import EPS
from octafar.surface import (
    CHART_VERTICES,
    SurfacePoint,
    antipode,
    boundary_inf_distance,
    fold_to_fundamental,
    in_fundamental_domain,
)


def test_every_face_has_three_distinct_neighbors(model):
    for face in model.faces:
        assert len(set(face.neighbors)) == 3
        assert face.id not in face.neighbors


def test_adjacency_symmetric(model):
    for face in model.faces:
        for nb in face.neighbors:
            assert face.id in model.faces[nb].neighbors


def test_antipodal_pairing_is_fixed_point_free_involution(model):
    for i in range(8):
        j = model.antipodal_face(i)
        assert j != i
        assert model.antipodal_face(j) == i
    assert model.antipodal_face(0) == 7


def test_gluing_isometries_mutually_inverse_and_match_edge(model):
    for face in model.faces:
        for k in range(3):
            nb = model.faces[face.neighbors[k]]
            back = nb.neighbors.index(face.id)
            comp = face.glue[k].compose(nb.glue[back])
            assert abs(comp.w - 1) < EPS and abs(comp.c) < EPS
            # The gluing maps the neighbor's copy of the shared edge onto
            # this face's edge k pointwise.
            ea, eb = CHART_VERTICES[k], CHART_VERTICES[(k + 1) % 3]
            shared = {face.oct_vertices[k], face.oct_vertices[(k + 1) % 3]}
            nb_slots = [i for i, v in enumerate(nb.oct_vertices) if v in shared]
            imgs = {face.glue[k](CHART_VERTICES[i]) for i in nb_slots}
            for target in (ea, eb):
                assert any(abs(img - target) < EPS for img in imgs)


def test_six_cone_points_in_three_antipodal_color_pairs(model):
    cones = model.cone_points()
    assert len(cones) == 6
    assert Counter(c for c, _ in cones) == {"black": 2, "white": 2, "grey": 2}
    for axis in range(3):
        for sign in (1, -1):
            assert model.cone_angle(axis, sign) == pytest.approx(4 * math.pi / 3)


def test_antipode_swaps_cone_color_partners(model):
    black = [sp for color, sp in model.cone_points() if color == "black"]
    img = antipode(black[0])
    other = black[1]
    assert model.embed(img) == pytest.approx(model.embed(other))


def test_antipode_is_involution():
    rng = random.Random(77)
    for _ in range(100):
        sp = sample_surface(rng)
        back = antipode(antipode(sp))
        assert back.face == sp.face
        assert abs(back.z - sp.z) < EPS


def test_antipode_of_reference_centroid(model):
    img = antipode(SurfacePoint(0, 0j))
    assert img.face == 7
    assert abs(img.z) < EPS


def test_antipode_negates_embedding(model):
    rng = random.Random(78)
    for _ in range(50):
        sp = sample_surface(rng)
        a = model.embed(sp)
        b = model.embed(antipode(sp))
        assert all(abs(x + y) < 1e-12 for x, y in zip(a, b))


def test_fold_identity_on_T():
    t, sym = fold_to_fundamental(SurfacePoint(0, complex(0.4, 0.1)))
    assert abs(t - complex(0.4, 0.1)) < EPS
    assert sym.rotation == 0 and not sym.reflect


def test_fold_single_reflection():
    # The mirror image of an interior T point across the bottom edge folds back.
    z = complex(0.4, -0.1)
    t, sym = fold_to_fundamental(SurfacePoint(0, z))
    assert abs(t - complex(0.4, 0.1)) < EPS
    assert sym.reflect


def test_fold_round_trip_random():
    rng = random.Random(5)
    for _ in range(200):
        sp = sample_surface(rng)
        t, sym = fold_to_fundamental(sp)
        assert in_fundamental_domain(t, EPS)
        back = sym.unfold(t)
        assert back.face == sp.face
        assert abs(back.z - sp.z) < 10 * EPS


def test_embedding_edge_lengths(model):
    # Chart triangles have edge sqrt(3); the embedding must be isometric.
    for face in range(8):
        pts = [model.embed(SurfacePoint(face, v)) for v in CHART_VERTICES]
        for i in range(3):
            a, b = pts[i], pts[(i + 1) % 3]
            d = math.dist(a, b)
            assert d == pytest.approx(math.sqrt(3), abs=1e-12)


def test_boundary_inf_distance():
    assert boundary_inf_distance(complex(0.1, 0.1 * math.sqrt(3))) < 1e-12
    assert boundary_inf_distance(complex(0.5, (1 - 0.5) / math.sqrt(3))) < 1e-12
    assert boundary_inf_distance(complex(0.5, 0.05)) > 0.04
