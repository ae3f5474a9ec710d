"""Canonical JSON emission: fixed 9-significant-digit floats, stable key
order, no whitespace variation.  Every machine-readable surface (CLI
--json, HTTP responses, verification reports) goes through here so that
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
import math


def format_float(x: float) -> str:
    if x != x or math.isinf(x):
        raise ValueError("non-finite value in canonical output")
    if x == 0.0:
        x = 0.0  # normalize -0.0
    s = f"{x:.9g}"
    return s


def canonical_dumps(obj) -> str:
    out: list[str] = []
    _emit(obj, out)
    return "".join(out)


def _emit(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, dict):
        out.append("{")
        first = True
        for k, v in obj.items():
            if not first:
                out.append(",")
            first = False
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        first = True
        for v in obj:
            if not first:
                out.append(",")
            first = False
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")
