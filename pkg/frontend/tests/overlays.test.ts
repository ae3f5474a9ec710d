// Overlay construction: toggles change visibility only, never values.

import { describe, expect, it } from "vitest";
import { readFileSync } from "fs";
import { join } from "path";

import type { PointResponse } from "../src/api.js";
import {
  buildDevelopmentOverlay,
  buildDomainOverlay,
  buildNetOverlay,
  buildReadouts,
} from "../src/overlays.js";
import { initialViewState, withToggle } from "../src/state.js";

function fixture(name: string): PointResponse {
  return JSON.parse(
    readFileSync(join(__dirname, "fixtures", name), "utf-8"),
  ) as PointResponse;
}

const resp = fixture("point_01_leftOfJ.json");

describe("development overlay", () => {
  it("renders six cells, the hexagon, and four vertex markers", () => {
    const shapes = buildDevelopmentOverlay(resp, initialViewState());
    expect(shapes.filter((s) => s.cls.startsWith("voronoi-cell"))).toHaveLength(6);
    expect(shapes.filter((s) => s.cls === "hexagon")).toHaveLength(1);
    expect(shapes.filter((s) => s.cls.includes("essential-vertex"))).toHaveLength(4);
  });

  it("toggles remove shapes without touching the readouts", () => {
    const base = initialViewState();
    const noCells = withToggle(base, "showCells", false);
    const shapes = buildDevelopmentOverlay(resp, noCells);
    expect(shapes.filter((s) => s.cls.startsWith("voronoi-cell"))).toHaveLength(0);
    expect(buildReadouts(resp)).toEqual(buildReadouts(resp));
  });

  it("degenerate probe (cone point) renders nothing", () => {
    const cone = fixture("point_02_sharpVertex.json");
    expect(buildDevelopmentOverlay(cone, initialViewState())).toHaveLength(0);
  });
});

describe("domain overlay", () => {
  it("includes probe, f image, and optional orbit trail", () => {
    const state = withToggle(initialViewState(), "showOrbit", true);
    const shapes = buildDomainOverlay(resp, state, null, null);
    expect(shapes.some((s) => s.cls === "probe")).toBe(true);
    expect(shapes.some((s) => s.cls === "f-image")).toBe(true);
    expect(shapes.some((s) => s.cls === "orbit-trail")).toBe(true);
  });

  it("probe marker sits at the fundamental point from the response", () => {
    const shapes = buildDomainOverlay(resp, initialViewState(), null, null);
    const probe = shapes.find((s) => s.cls === "probe")!;
    expect(probe.center).toEqual([resp.fundamental.x, resp.fundamental.y]);
  });
});

describe("net overlay", () => {
  it("marks the probe and every farthest point with its face id", () => {
    const shapes = buildNetOverlay(resp);
    const probe = shapes.find((s) => s.cls === "probe")!;
    expect(probe.face).toBe(resp.query.face);
    const markers = shapes.filter((s) => s.cls.startsWith("farthest-marker"));
    expect(markers).toHaveLength(resp.farthest.points.length);
    expect(markers[0].face).toBe(resp.farthest.points[0].face);
    expect(markers[0].center).toEqual([
      resp.farthest.points[0].x,
      resp.farthest.points[0].y,
    ]);
  });

  it("two-valued probe yields two markers", () => {
    const onJ = fixture("point_09_onJ.json");
    const markers = buildNetOverlay(onJ).filter((s) =>
      s.cls.startsWith("farthest-marker"),
    );
    expect(markers).toHaveLength(2);
  });
});
