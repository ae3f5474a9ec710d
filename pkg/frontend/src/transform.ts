// Affine viewport transforms (the only geometry the client performs)
// and hit-testing helpers for the net and domain panels.

import { CHART_VERTICES, NET_TRANSFORMS } from "./netlayout.js";

export interface Viewport {
  xmin: number;
  ymin: number;
  xmax: number;
  ymax: number;
  width: number;   // pixels
  height: number;  // pixels
}

export function makeViewport(
  xmin: number, ymin: number, xmax: number, ymax: number,
  width: number, pad = 0.04,
): Viewport {
  const padAbs = pad * Math.max(xmax - xmin, ymax - ymin);
  xmin -= padAbs;
  ymin -= padAbs;
  xmax += padAbs;
  ymax += padAbs;
  const height = (width * (ymax - ymin)) / (xmax - xmin);
  return { xmin, ymin, xmax, ymax, width, height };
}

export function toScreen(v: Viewport, x: number, y: number): [number, number] {
  const sx = v.width / (v.xmax - v.xmin);
  const sy = v.height / (v.ymax - v.ymin);
  return [(x - v.xmin) * sx, (v.ymax - y) * sy];
}

export function fromScreen(v: Viewport, px: number, py: number): [number, number] {
  const sx = v.width / (v.xmax - v.xmin);
  const sy = v.height / (v.ymax - v.ymin);
  return [v.xmin + px / sx, v.ymax - py / sy];
}

export function pointsAttr(v: Viewport, pts: [number, number][]): string {
  return pts.map(([x, y]) => toScreen(v, x, y).map(fmtCoord).join(",")).join(" ");
}

function fmtCoord(c: number): string {
  return String(Math.round(c * 100) / 100);
}

// --- net layout -----------------------------------------------------------

export function netPosition(face: number, x: number, y: number): [number, number] {
  const t = NET_TRANSFORMS[face];
  const [wx, wy] = t.w;
  const [cx, cy] = t.c;
  return [wx * x - wy * y + cx, wx * y + wy * x + cy];
}

export function netFaceTriangle(face: number): [number, number][] {
  return CHART_VERTICES.map(([x, y]) => netPosition(face, x, y));
}

function chartFromNet(face: number, nx: number, ny: number): [number, number] {
  const t = NET_TRANSFORMS[face];
  const [wx, wy] = t.w;
  const dx = nx - t.c[0];
  const dy = ny - t.c[1];
  // inverse rotation: multiply by the conjugate of w
  return [wx * dx + wy * dy, wx * dy - wy * dx];
}

export function barycentric(x: number, y: number): [number, number, number] {
  const [a, b, c] = CHART_VERTICES;
  const det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  const l1 = ((x - a[0]) * (c[1] - a[1]) - (y - a[1]) * (c[0] - a[0])) / det;
  const l2 = ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0])) / det;
  return [1 - l1 - l2, l1, l2];
}

export interface NetHit {
  face: number;
  x: number;
  y: number;
}

export function hitNet(nx: number, ny: number): NetHit | null {
  for (let face = 0; face < 8; face += 1) {
    const [x, y] = chartFromNet(face, nx, ny);
    const lam = barycentric(x, y);
    if (lam.every((l) => l >= -1e-9)) return { face, x, y };
  }
  return null;
}

// --- fundamental domain ---------------------------------------------------

const SQRT3 = Math.sqrt(3);

export const T_VERTICES: [number, number][] = [
  [0, 0],
  [1, 0],
  [0.25, SQRT3 / 4],
];

export function clampToDomain(x: number, y: number): [number, number] {
  // Snap a pointer position into the closed triangle T by clamping its
  // barycentric coordinates (affine operation on screen input).
  const [a, b, c] = T_VERTICES;
  const det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  let l1 = ((x - a[0]) * (c[1] - a[1]) - (y - a[1]) * (c[0] - a[0])) / det;
  let l2 = ((b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0])) / det;
  let l0 = 1 - l1 - l2;
  l0 = Math.max(l0, 0);
  l1 = Math.max(l1, 0);
  l2 = Math.max(l2, 0);
  const s = l0 + l1 + l2;
  l0 /= s;
  l1 /= s;
  l2 /= s;
  return [
    l0 * a[0] + l1 * b[0] + l2 * c[0],
    l0 * a[1] + l1 * b[1] + l2 * c[1],
  ];
}
