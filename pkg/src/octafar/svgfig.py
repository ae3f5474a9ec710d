"""Deterministic SVG figure emission.

Geometry is written in chart coordinates inside a single flipped-y group
transform, so path data can be checked against the math directly; output
depends only on the figure parameters (fixed palette, 9-significant-digit
numbers, no timestamps).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import dynamics, farmap, hexagon
from .jsonfmt import format_float as f9
from .planar import SQRT3
from .surface import CHART_VERTICES, T_VERTICES

FIGURE_IDS = (
    "T-and-J",
    "face-limit-set",
    "J-iterates",
    "hexagon-voronoi",
    "plan-schematic",
)

_CELL_COLORS = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948")


@dataclass
class FigureSpec:
    figure_id: str
    params: dict = field(default_factory=dict)


class UnknownFigure(ValueError):
    pass


def render(spec: FigureSpec) -> str:
    if spec.figure_id == "T-and-J":
        return _fig_t_and_j(int(spec.params.get("samples", 400)))
    if spec.figure_id == "face-limit-set":
        return _fig_face_limit_set()
    if spec.figure_id == "J-iterates":
        return _fig_j_iterates(
            int(spec.params.get("k_max", 10)), int(spec.params.get("samples", 200))
        )
    if spec.figure_id == "hexagon-voronoi":
        x = float(spec.params.get("x", 0.5))
        y = float(spec.params.get("y", 0.25 * SQRT3 * 0.5))
        return _fig_hexagon_voronoi(complex(x, y))
    if spec.figure_id == "plan-schematic":
        x = float(spec.params.get("x", 0.35))
        y = float(spec.params.get("y", 0.1))
        return _fig_plan_schematic(complex(x, y))
    raise UnknownFigure(f"unknown figure id {spec.figure_id!r}")


def _pts(points) -> str:
    return " ".join(f"{f9(z.real)},{f9(z.imag)}" for z in points)


def _path(points, close: bool = False) -> str:
    head = f"M {f9(points[0].real)} {f9(points[0].imag)}"
    rest = " ".join(f"L {f9(z.real)} {f9(z.imag)}" for z in points[1:])
    return f"{head} {rest}" + (" Z" if close else "")


def _document(body: list[str], xmin, ymin, xmax, ymax, size=640) -> str:
    pad = 0.05 * max(xmax - xmin, ymax - ymin)
    xmin -= pad
    ymin -= pad
    xmax += pad
    ymax += pad
    w = xmax - xmin
    h = ymax - ymin
    scale = size / max(w, h)
    width = f9(w * scale)
    height = f9(h * scale)
    # Flip y so chart coordinates render with y upward.
    transform = (
        f"translate({f9(-xmin * scale)},{f9(ymax * scale)}) "
        f"scale({f9(scale)},{f9(-scale)})"
    )
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<g transform="{transform}">',
        *body,
        "</g>",
        "</svg>",
        "",
    ]
    return "\n".join(lines)


def _stroke(width: float) -> str:
    return f'fill="none" stroke-width="{f9(width)}" vector-effect="non-scaling-stroke"'


def _t_outline() -> str:
    return (
        f'<path class="domain-T" d="{_path(list(T_VERTICES), close=True)}" '
        f'{_stroke(0.004)} stroke="#333333"/>'
    )


def _fig_t_and_j(samples: int) -> str:
    r = farmap.root_r()
    delta = (0.25 - r) * 1e-4
    xs = [r + (0.25 - delta - r) * i / (samples - 1) for i in range(samples)]
    jpts = [complex(x, farmap.curve_j(x)) for x in xs]
    body = [
        _t_outline(),
        f'<path id="curve-j" d="{_path(jpts)}" {_stroke(0.006)} stroke="#c0392b"/>',
    ]
    return _document(body, 0.0, 0.0, 1.0, SQRT3 / 4.0)


def _fig_face_limit_set() -> str:
    payload_segments = []
    from .schema import build_limit_set_payload

    for seg in build_limit_set_payload()["segments"]:
        a = complex(*seg["a"])
        b = complex(*seg["b"])
        payload_segments.append(
            f'<path class="limit-{seg["kind"]}" d="{_path([a, b])}" '
            f'{_stroke(0.008)} stroke="#2c3e50"/>'
        )
    face = (
        f'<path class="face" d="{_path(list(CHART_VERTICES), close=True)}" '
        f'{_stroke(0.004)} stroke="#999999"/>'
    )
    return _document([face, *payload_segments], -0.75, -SQRT3 / 2.0, 1.05, SQRT3 / 2.0)


def _fig_j_iterates(k_max: int, samples: int) -> str:
    bands = dynamics.j_band_images(k_max, samples)
    body = [_t_outline()]
    for k, (left, right) in enumerate(bands):
        ring = left + list(reversed(right))
        shade = 0.25 + 0.5 * (k + 1) / k_max
        body.append(
            f'<path class="band" d="{_path(ring, close=True)}" '
            f'fill="#3a7ca5" fill-opacity="{f9(shade * 0.35)}" stroke="none"/>'
        )
    r = farmap.root_r()
    delta = (0.25 - r) * 1e-4
    xs = [r + (0.25 - delta - r) * i / (samples - 1) for i in range(samples)]
    jpts = [complex(x, farmap.curve_j(x)) for x in xs]
    body.append(f'<path id="curve-j" d="{_path(jpts)}" {_stroke(0.006)} stroke="#c0392b"/>')
    return _document(body, 0.0, 0.0, 1.0, SQRT3 / 4.0)


def _fig_hexagon_voronoi(p: complex) -> str:
    cells, essential = hexagon.voronoi(p)
    hexa = hexagon.hexagon(p)
    body = []
    for cell in cells:
        body.append(
            f'<polygon class="voronoi-cell" points="{_pts(cell.polygon)}" '
            f'fill="{_CELL_COLORS[cell.index]}" fill-opacity="0.45" '
            f'stroke="#ffffff" stroke-width="0.01"/>'
        )
    body.append(
        f'<polygon class="hexagon" points="{_pts(hexa.vertices)}" '
        f'{_stroke(0.01)} stroke="#222222"/>'
    )
    body.append(
        f'<polygon class="triangle-a0" points="{_pts(hexagon.A0_VERTICES)}" '
        f'{_stroke(0.008)} stroke="#000000"/>'
    )
    for ev in essential:
        body.append(
            f'<circle class="essential-vertex" data-label="{ev.label}" '
            f'cx="{f9(ev.location.real)}" cy="{f9(ev.location.imag)}" r="0.035" '
            f'fill="#ffd60a" stroke="#333333" stroke-width="0.008"/>'
        )
    body.append(
        f'<circle class="probe" cx="{f9(p.real)}" cy="{f9(p.imag)}" r="0.03" '
        f'fill="#c0392b"/>'
    )
    xs = [v.real for v in hexa.vertices]
    ys = [v.imag for v in hexa.vertices]
    return _document(body, min(xs), min(ys), max(xs), max(ys))


def _fig_plan_schematic(p: complex) -> str:
    hexa = hexagon.hexagon(p)
    body = [
        f'<polygon class="face" points="{_pts(CHART_VERTICES)}" '
        f'fill="#f5cba7" stroke="#935116" stroke-width="0.01"/>'
    ]
    body.append(
        f'<polygon class="domain-T" points="{_pts(T_VERTICES)}" '
        f'fill="#aed6f1" stroke="#1b4f72" stroke-width="0.008"/>'
    )
    for j, iso in enumerate(hexagon.UNFOLD_ISOMETRIES):
        tri = [iso(v) for v in T_VERTICES]
        body.append(
            f'<polygon class="tile-T{j}" points="{_pts(tri)}" '
            f'fill="none" stroke="#2874a6" stroke-width="0.008"/>'
        )
    body.append(
        f'<polygon class="triangle-a0" points="{_pts(hexagon.A0_VERTICES)}" '
        f'fill="#d5f5e3" fill-opacity="0.8" stroke="#186a3b" stroke-width="0.01"/>'
    )
    body.append(
        f'<polygon class="hexagon" points="{_pts(hexa.vertices)}" '
        f'{_stroke(0.012)} stroke="#222222"/>'
    )
    for j, v in enumerate(hexa.vertices):
        body.append(
            f'<circle class="probe-copy" data-index="{j}" cx="{f9(v.real)}" '
            f'cy="{f9(v.imag)}" r="0.05" fill="#c0392b"/>'
        )
    # The disk of radius 3 about the sharp vertex bounds the whole plan.
    body.append(
        f'<circle class="diameter-circle" cx="1" cy="0" r="3" '
        f'{_stroke(0.008)} stroke="#2e86c1" stroke-dasharray="0.08,0.05"/>'
    )
    return _document(body, -2.0, -3.0, 4.0, 3.0)
