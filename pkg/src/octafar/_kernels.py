"""Kernel backend selection: compiled extension when available, numpy otherwise."""

from __future__ import annotations

from . import _kernels_py

try:  # pragma: no cover - depends on build environment
    from . import _kernels_cy as _impl
except ImportError:  # pragma: no cover
    _impl = _kernels_py

BACKEND: str = _impl.BACKEND
min_unfold_distances = _impl.min_unfold_distances


def backends() -> dict[str, object]:
    """All importable kernel backends, keyed by name (for benchmarks/tests)."""
    found = {"python": _kernels_py}
    if _impl is not _kernels_py:
        found["cython"] = _impl
    return found
