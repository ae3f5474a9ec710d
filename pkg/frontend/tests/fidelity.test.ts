// UI fidelity: every number rendered equals the service response field
// verbatim, across ten scripted probe positions captured from the real
// service.

import { describe, expect, it } from "vitest";
import { readFileSync } from "fs";
import { join } from "path";

import type { PointResponse } from "../src/api.js";
import { buildReadouts, farthestLabels, fmt } from "../src/overlays.js";

import manifest from "./fixtures/manifest.json";

function loadFixture(file: string): PointResponse {
  const raw = readFileSync(join(__dirname, "fixtures", file), "utf-8");
  return JSON.parse(raw) as PointResponse;
}

describe("rendered numbers equal response fields verbatim", () => {
  it("covers ten scripted probes", () => {
    expect(manifest).toHaveLength(10);
  });

  for (const entry of manifest) {
    it(`probe ${entry.name}`, () => {
      const resp = loadFixture(entry.file);
      const readouts = buildReadouts(resp);
      const byKey = Object.fromEntries(readouts.map((r) => [r.key, r.value]));

      expect(byKey["region"]).toBe(resp.region);
      expect(byKey["g_value"]).toBe(fmt(resp.g_value));
      expect(byKey["distance"]).toBe(fmt(resp.farthest.distance));
      expect(byKey["fundamental"]).toBe(
        `(${fmt(resp.fundamental.x)}, ${fmt(resp.fundamental.y)})`,
      );
      resp.f_image.forEach((img, i) => {
        expect(byKey[`f_image_${i}`]).toBe(`(${fmt(img[0])}, ${fmt(img[1])})`);
      });
      resp.farthest.points.forEach((q, i) => {
        expect(byKey[`farthest_${i}`]).toBe(
          `face ${q.face} (${fmt(q.x)}, ${fmt(q.y)})`,
        );
      });
      if (resp.orbit && resp.orbit.limit_multiplier !== null) {
        expect(byKey["orbit_multiplier"]).toBe(fmt(resp.orbit.limit_multiplier));
      }
    });
  }
});

describe("crossing J swaps the highlighted farthest vertex", () => {
  it("left of J highlights the (025) marker", () => {
    const resp = loadFixture("point_05_nearJ_left.json");
    expect(resp.region).toBe("LeftOfJ");
    expect(farthestLabels(resp)).toEqual(["025"]);
  });

  it("right of J highlights the (235) marker", () => {
    const resp = loadFixture("point_06_nearJ_right.json");
    expect(resp.region).toBe("RightOfJ");
    expect(farthestLabels(resp)).toEqual(["235"]);
  });

  it("the near-J pair sits at the same height (a horizontal drag)", () => {
    const left = loadFixture("point_05_nearJ_left.json");
    const right = loadFixture("point_06_nearJ_right.json");
    expect(left.query.y).toBe(right.query.y);
  });

  it("on J both markers are highlighted", () => {
    const resp = loadFixture("point_09_onJ.json");
    expect(resp.region).toBe("OnJ");
    expect(farthestLabels(resp).sort()).toEqual(["025", "235"]);
    expect(resp.farthest.points).toHaveLength(2);
  });
});

describe("special probes", () => {
  it("cone point: single antipodal marker at distance 3", () => {
    const resp = loadFixture("point_02_sharpVertex.json");
    expect(resp.region).toBe("SharpVertex");
    expect(resp.farthest.distance).toBe(3);
    expect(resp.farthest.points).toHaveLength(1);
    expect(resp.hexagon).toBeNull();
  });

  it("boundary probe is a fixed point of the map", () => {
    const resp = loadFixture("point_04_boundaryInf.json");
    expect(resp.region).toBe("BoundaryInf");
    expect(resp.f_image).toHaveLength(1);
    expect(resp.f_image[0][0]).toBeCloseTo(resp.fundamental.x, 9);
    expect(resp.f_image[0][1]).toBeCloseTo(resp.fundamental.y, 9);
  });

  it("forked orbit fixtures carry one trail per branch", () => {
    const left = loadFixture("onJ_branch_left.json");
    const right = loadFixture("onJ_branch_right.json");
    expect(left.orbit!.points.length).toBeGreaterThan(2);
    expect(right.orbit!.points.length).toBeGreaterThan(2);
    // trails diverge from the common start
    expect(left.orbit!.points[1][0]).toBeLessThan(right.orbit!.points[1][0]);
  });
});
