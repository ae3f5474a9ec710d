// Viewport and net-layout transforms.

import { describe, expect, it } from "vitest";

import {
  barycentric,
  clampToDomain,
  fromScreen,
  hitNet,
  makeViewport,
  netFaceTriangle,
  netPosition,
  toScreen,
} from "../src/transform.js";

describe("viewport", () => {
  const v = makeViewport(0, 0, 2, 1, 800);

  it("round trips screen coordinates", () => {
    for (const [x, y] of [[0.3, 0.4], [1.9, 0.05], [0, 0]] as [number, number][]) {
      const [px, py] = toScreen(v, x, y);
      const [bx, by] = fromScreen(v, px, py);
      expect(bx).toBeCloseTo(x, 9);
      expect(by).toBeCloseTo(y, 9);
    }
  });

  it("flips the y axis", () => {
    const [, pyLow] = toScreen(v, 1, 0);
    const [, pyHigh] = toScreen(v, 1, 1);
    expect(pyHigh).toBeLessThan(pyLow);
  });
});

describe("net layout", () => {
  it("all eight faces have equilateral triangles of the chart size", () => {
    for (let face = 0; face < 8; face += 1) {
      const tri = netFaceTriangle(face);
      for (let i = 0; i < 3; i += 1) {
        const a = tri[i];
        const b = tri[(i + 1) % 3];
        expect(Math.hypot(a[0] - b[0], a[1] - b[1])).toBeCloseTo(Math.sqrt(3), 9);
      }
    }
  });

  it("consecutive faces of the band share an edge", () => {
    const chain = [0, 1, 4, 7, 5, 3, 6, 2];
    for (let i = 0; i + 1 < chain.length; i += 1) {
      const a = netFaceTriangle(chain[i]);
      const b = netFaceTriangle(chain[i + 1]);
      let shared = 0;
      for (const p of a) {
        for (const q of b) {
          if (Math.hypot(p[0] - q[0], p[1] - q[1]) < 1e-9) shared += 1;
        }
      }
      expect(shared).toBe(2);
    }
  });

  it("hit testing inverts the placement", () => {
    for (let face = 0; face < 8; face += 1) {
      const [nx, ny] = netPosition(face, 0, 0); // chart centroid
      const hit = hitNet(nx, ny)!;
      expect(hit.face).toBe(face);
      expect(hit.x).toBeCloseTo(0, 9);
      expect(hit.y).toBeCloseTo(0, 9);
    }
  });

  it("misses outside the band", () => {
    expect(hitNet(-50, -50)).toBeNull();
  });
});

describe("fundamental-domain clamping", () => {
  it("keeps interior points", () => {
    const [x, y] = clampToDomain(0.4, 0.1);
    expect(x).toBeCloseTo(0.4, 12);
    expect(y).toBeCloseTo(0.1, 12);
  });

  it("snaps outside points into the closed triangle", () => {
    const cases: [number, number][] = [[-0.5, 0.5], [2, 0], [0.5, -1], [0.8, 0.8]];
    for (const [x, y] of cases) {
      const [cx, cy] = clampToDomain(x, y);
      expect(cy).toBeGreaterThanOrEqual(-1e-9);
      expect(Math.sqrt(3) * cx - cy).toBeGreaterThanOrEqual(-1e-9);
      expect(1 - cx - Math.sqrt(3) * cy).toBeGreaterThanOrEqual(-1e-9);
    }
  });

  it("barycentric sums to one", () => {
    const [l0, l1, l2] = barycentric(0.2, 0.1);
    expect(l0 + l1 + l2).toBeCloseTo(1, 12);
  });
});
