"""Stateless JSON-over-HTTP facade for the interactive explorer.

Every response body is produced by the canonical serializer, so identical
requests yield byte-identical bodies; all geometry is computed per
request from the immutable model.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.staticfiles import StaticFiles

from . import __version__, farmap
from .hexagon import SharpVertexDegenerate
from .jsonfmt import canonical_dumps
from .schema import (
    SCHEMA_VERSION,
    OffSurface,
    build_curve_j_payload,
    build_limit_set_payload,
    build_point_response,
)
from .surface import build_model


def _json_response(payload: dict, status_code: int = 200) -> Response:
    return Response(
        content=canonical_dumps(payload) + "\n",
        status_code=status_code,
        media_type="application/json",
    )


def _error(kind: str, detail: str, status_code: int) -> Response:
    return _json_response(
        {"error": {"kind": kind, "detail": detail}}, status_code=status_code
    )


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="octafar explorer service", version=__version__)
    model = build_model()

    @app.exception_handler(RequestValidationError)
    async def _bad_params(request: Request, exc: RequestValidationError):
        return _error("bad_parameter", str(exc.errors()[:1]), 400)

    @app.get("/healthz")
    def healthz() -> Response:
        return _json_response(
            {
                "status": "ok",
                "version": __version__,
                "schema_version": SCHEMA_VERSION,
                "service": "octafar",
            }
        )

    @app.get("/api/point")
    def api_point(face: int = 0, x: float = 0.0, y: float = 0.0,
                  orbit: int | None = None,
                  branch: str | None = None) -> Response:
        if orbit is not None and orbit < 1:
            return _error("bad_parameter", "orbit must be at least 1", 400)
        if branch is not None and branch not in ("left", "right"):
            return _error("bad_parameter", "branch must be left or right", 400)
        try:
            body = build_point_response(
                model, face, x, y, orbit_n=orbit, orbit_branch=branch
            )
        except OffSurface as exc:
            return _error("off_surface", str(exc), 400)
        except (farmap.NotInT, SharpVertexDegenerate) as exc:
            return _error("bad_parameter", str(exc), 400)
        return _json_response(body)

    @app.get("/api/curve_j")
    def api_curve_j(samples: int = 100) -> Response:
        if samples < 2:
            return _error("bad_parameter", "samples must be at least 2", 400)
        return _json_response(build_curve_j_payload(samples))

    @app.get("/api/limit_set")
    def api_limit_set() -> Response:
        return _json_response(build_limit_set_payload())

    @app.get("/api/{rest:path}")
    def api_unknown(rest: str) -> Response:
        return _error("not_found", f"unknown API route /api/{rest}", 404)

    if static_dir and os.path.isdir(static_dir):
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")
    else:
        @app.get("/")
        def no_ui() -> Response:
            return _error("not_found", "UI bundle not built", 404)

    return app
