import math
import random

import pytest
from fastapi.testclient import TestClient

from conftest import sample_surface
from octafar.jsonfmt import canonical_dumps
from octafar.schema import build_point_response
from octafar.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_healthz(client):
    r = client.get("/healthz")
    assert r.status_code == 200
    body = r.json()
    assert body["status"] == "ok"
    assert body["version"]
    assert body["schema_version"] == 1


def test_point_query_right_of_j(client):
    r = client.get("/api/point", params={"face": 0, "x": 0.5, "y": 0.0})
    assert r.status_code == 200
    body = r.json()
    assert body["region"] == "RightOfJ"
    assert body["f_image"] == [[0.666666667, 0]]
    assert body["farthest"]["distance"] == pytest.approx(math.sqrt(259) / 6, abs=1e-8)
    assert len(body["voronoi_cells"]) == 6
    # On the bottom edge of T the essential vertices merge in pairs.
    assert [ev["label"] for ev in body["essential_vertices"]] == ["0125", "2345"]
    # closed CCW polygons
    hexagon = body["hexagon"]
    assert hexagon[0] == hexagon[-1]


def test_point_query_interior_has_four_essential_vertices(client):
    r = client.get("/api/point", params={"face": 0, "x": 0.5, "y": 0.1})
    assert r.status_code == 200
    body = r.json()
    assert sorted(ev["label"] for ev in body["essential_vertices"]) == [
        "012", "025", "235", "345",
    ]


def test_point_query_cone_point(client):
    r = client.get("/api/point", params={"face": 0, "x": 1.0, "y": 0.0})
    assert r.status_code == 200
    body = r.json()
    assert body["region"] == "SharpVertex"
    assert body["farthest"]["distance"] == 3
    assert body["hexagon"] is None


def test_point_query_malformed_parameter(client):
    r = client.get("/api/point", params={"face": 0, "x": "abc", "y": 0.0})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "bad_parameter"


def test_point_query_off_surface(client):
    r = client.get("/api/point", params={"face": 0, "x": 4.0, "y": 0.0})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "off_surface"


def test_point_query_orbit(client):
    r = client.get("/api/point", params={"face": 0, "x": 0.5, "y": 0.0, "orbit": 6})
    assert r.status_code == 200
    body = r.json()
    assert body["orbit"]["points"][0] == [0.5, 0]
    assert body["orbit"]["points"][1] == [0.666666667, 0]


def test_point_response_byte_identical(client):
    params = {"face": 2, "x": 0.31, "y": 0.12, "orbit": 4}
    r1 = client.get("/api/point", params=params)
    r2 = client.get("/api/point", params=params)
    assert r1.content == r2.content


def test_point_matches_library(client, model):
    rng = random.Random(99)
    for _ in range(50):
        sp = sample_surface(rng)
        params = {"face": sp.face, "x": sp.z.real, "y": sp.z.imag}
        r = client.get("/api/point", params=params)
        assert r.status_code == 200
        expected = canonical_dumps(
            build_point_response(model, sp.face, sp.z.real, sp.z.imag)
        )
        assert r.text.strip() == expected


def test_curve_j_endpoints(client):
    r = client.get("/api/curve_j", params={"samples": 2})
    assert r.status_code == 200
    pts = r.json()["points"]
    assert len(pts) == 2
    assert pts[0][0] == pytest.approx(0.239123278, abs=1e-8)
    assert abs(pts[0][1]) < 1e-9


def test_curve_j_rejects_small_sample_count(client):
    r = client.get("/api/curve_j", params={"samples": 1})
    assert r.status_code == 400
    assert r.json()["error"]["kind"] == "bad_parameter"


def test_limit_set_six_segments(client):
    r = client.get("/api/limit_set")
    assert r.status_code == 200
    body = r.json()
    assert len(body["segments"]) == 6
    kinds = [seg["kind"] for seg in body["segments"]]
    assert kinds.count("edge") == 3
    assert kinds.count("median") == 3
    for seg in body["segments"]:
        length = math.dist(seg["a"], seg["b"])
        expected = math.sqrt(3) if seg["kind"] == "edge" else 0.5
        assert length == pytest.approx(expected, abs=1e-9)


def test_unknown_api_route(client):
    r = client.get("/api/does-not-exist")
    assert r.status_code == 404
    assert r.json()["error"]["kind"] == "not_found"


def test_root_without_ui_bundle(client):
    assert client.get("/").status_code == 404


def test_static_ui_served_when_present(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>explorer</body></html>")
    app = create_app(static_dir=str(tmp_path))
    c = TestClient(app)
    r = c.get("/")
    assert r.status_code == 200
    assert "explorer" in r.text
    # API routes still win over the static mount.
    assert c.get("/healthz").status_code == 200
