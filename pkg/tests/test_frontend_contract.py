"""Keeps the UI test fixtures in lockstep with the service schema.

The frontend's fidelity tests assert that rendered numbers equal the
response fields of these captured payloads; this module asserts that the
captured payloads equal what the service produces today, so the whole
chain (service -> fixture -> rendered string) stays connected.
"""

import json
import pathlib
import socket
import subprocess
import sys
import time
import urllib.request

import pytest

from octafar.jsonfmt import canonical_dumps
from octafar.schema import build_point_response

FRONTEND = pathlib.Path(__file__).resolve().parent.parent / "frontend"
FIXTURES = FRONTEND / "tests" / "fixtures"


@pytest.mark.skipif(not FIXTURES.exists(), reason="frontend fixtures not present")
def test_fixtures_match_current_schema(model):
    manifest = json.loads((FIXTURES / "manifest.json").read_text())
    assert len(manifest) == 10
    for entry in manifest:
        q = entry["query"]
        expected = canonical_dumps(
            build_point_response(
                model, q["face"], q["x"], q["y"], orbit_n=q.get("orbit")
            )
        )
        stored = (FIXTURES / entry["file"]).read_text()
        assert stored == expected, f"fixture {entry['file']} is stale"


@pytest.mark.skipif(not FIXTURES.exists(), reason="frontend fixtures not present")
def test_branch_fixtures_match_current_schema(model):
    first = json.loads((FIXTURES / "manifest.json").read_text())[-1]
    q = first["query"]
    for branch in ("left", "right"):
        expected = canonical_dumps(
            build_point_response(
                model, q["face"], q["x"], q["y"], orbit_n=12, orbit_branch=branch
            )
        )
        stored = (FIXTURES / f"onJ_branch_{branch}.json").read_text()
        assert stored == expected


def _free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def test_serve_subcommand_end_to_end(model):
    port = _free_port()
    static = str(FRONTEND / "dist") if (FRONTEND / "dist").is_dir() else None
    cmd = [sys.executable, "-m", "octafar.cli", "serve", "--port", str(port)]
    if static:
        cmd += ["--static-dir", static]
    proc = subprocess.Popen(cmd, stdout=subprocess.PIPE, stderr=subprocess.STDOUT)
    try:
        deadline = time.time() + 20
        body = None
        while time.time() < deadline:
            try:
                with urllib.request.urlopen(
                    f"http://127.0.0.1:{port}/healthz", timeout=1
                ) as resp:
                    body = json.loads(resp.read())
                break
            except OSError:
                time.sleep(0.2)
        assert body is not None, "service did not come up"
        assert body["status"] == "ok"
        url = f"http://127.0.0.1:{port}/api/point?face=0&x=0.5&y=0"
        with urllib.request.urlopen(url, timeout=5) as resp:
            got = resp.read().decode().strip()
        expected = canonical_dumps(build_point_response(model, 0, 0.5, 0.0))
        assert got == expected
        if static:
            with urllib.request.urlopen(
                f"http://127.0.0.1:{port}/", timeout=5
            ) as resp:
                assert b"farthest-point explorer" in resp.read()
    finally:
        proc.terminate()
        proc.wait(timeout=10)
