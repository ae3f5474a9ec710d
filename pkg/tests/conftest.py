import random

import pytest

from octafar.hexagon import phi
from octafar.surface import CHART_VERTICES, SurfacePoint, build_model


@pytest.fixture(scope="session")
def model():
    return build_model()


def sample_T(rng: random.Random, margin: float = 0.0) -> complex:
    """Deterministic probe sampling through the square parametrization."""
    a = margin + (1.0 - 2.0 * margin) * rng.random()
    b = margin + (1.0 - 2.0 * margin) * rng.random()
    return phi(a, b)


def sample_surface(rng: random.Random) -> SurfacePoint:
    face = rng.randrange(8)
    u, v = sorted((rng.random(), rng.random()))
    lam = (u, v - u, 1.0 - v)
    z = sum(w * vert for w, vert in zip(lam, CHART_VERTICES))
    return SurfacePoint(face, z)
