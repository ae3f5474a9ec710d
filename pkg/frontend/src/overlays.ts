// Pure construction of the render model from a service response and the
// view state.  Every displayed number is the String() of a response
// field; nothing here recomputes geometry.

import type {
  CurveJResponse,
  EssentialVertexDto,
  LimitSetResponse,
  PointResponse,
} from "./api.js";
import { ViewState } from "./state.js";

export interface Shape {
  tag: "polygon" | "polyline" | "circle" | "line";
  cls: string;
  // data coordinates; panels apply their viewport transform when rendering
  points?: [number, number][];
  center?: [number, number];
  r?: number;
  label?: string;
  face?: number; // net-panel shapes: chart coordinates within this face
}

export interface Readout {
  key: string;
  label: string;
  value: string;
  tone?: "left" | "right" | "neutral" | "alert";
}

export function fmt(value: number): string {
  return String(value);
}

// --- readout panel ---------------------------------------------------------

export function buildReadouts(resp: PointResponse): Readout[] {
  const out: Readout[] = [];
  out.push({
    key: "region",
    label: "region",
    value: resp.region,
    tone:
      resp.region === "LeftOfJ"
        ? "left"
        : resp.region === "RightOfJ"
          ? "right"
          : resp.region === "OnJ"
            ? "alert"
            : "neutral",
  });
  out.push({
    key: "g_value",
    label: "G(p)",
    value: fmt(resp.g_value),
    tone: resp.g_value > 0 ? "left" : resp.g_value < 0 ? "right" : "neutral",
  });
  out.push({
    key: "query",
    label: "probe (face, x, y)",
    value: `${resp.query.face} (${fmt(resp.query.x)}, ${fmt(resp.query.y)})`,
  });
  out.push({
    key: "fundamental",
    label: "fundamental point",
    value: `(${fmt(resp.fundamental.x)}, ${fmt(resp.fundamental.y)})`,
  });
  const sym = resp.fundamental.symmetry;
  out.push({
    key: "symmetry",
    label: "folding symmetry",
    value: `face ${sym.face}, rotation ${sym.rotation}, reflect ${sym.reflect}`,
  });
  resp.f_image.forEach((img, i) => {
    out.push({
      key: `f_image_${i}`,
      label: resp.f_image.length > 1 ? `f(p) branch ${i === 0 ? "left" : "right"}` : "f(p)",
      value: `(${fmt(img[0])}, ${fmt(img[1])})`,
    });
  });
  out.push({
    key: "distance",
    label: "farthest distance",
    value: fmt(resp.farthest.distance),
  });
  resp.farthest.points.forEach((q, i) => {
    out.push({
      key: `farthest_${i}`,
      label: `farthest point ${i + 1}`,
      value: `face ${q.face} (${fmt(q.x)}, ${fmt(q.y)})`,
    });
  });
  if (resp.orbit) {
    out.push({
      key: "orbit_termination",
      label: "orbit",
      value: resp.orbit.terminated_by,
      tone: resp.orbit.terminated_by === "hit_OnJ" ? "alert" : "neutral",
    });
    if (resp.orbit.limit_multiplier !== null) {
      out.push({
        key: "orbit_multiplier",
        label: "limit multiplier",
        value: fmt(resp.orbit.limit_multiplier),
      });
    }
  }
  return out;
}

// --- development panel (hexagon, cells, essential vertices) ----------------

/** Labels of the essential vertices realizing the farthest set. */
export function farthestLabels(resp: PointResponse): string[] {
  if (!resp.essential_vertices) return [];
  const labels: string[] = [];
  for (const cp of resp.farthest.chart_points) {
    let best: EssentialVertexDto | null = null;
    let bestGap = Infinity;
    for (const ev of resp.essential_vertices) {
      const gap = Math.hypot(ev.x - cp[0], ev.y - cp[1]);
      if (gap < bestGap) {
        bestGap = gap;
        best = ev;
      }
    }
    if (best && bestGap < 1e-6 && !labels.includes(best.label)) {
      labels.push(best.label);
    }
  }
  return labels;
}

export function buildDevelopmentOverlay(
  resp: PointResponse,
  state: ViewState,
): Shape[] {
  const shapes: Shape[] = [];
  if (!resp.hexagon) return shapes;
  if (state.showCells && resp.voronoi_cells) {
    for (const cell of resp.voronoi_cells) {
      shapes.push({
        tag: "polygon",
        cls: `voronoi-cell cell-${cell.index}`,
        points: cell.polygon,
      });
    }
  }
  if (state.showHexagon) {
    shapes.push({ tag: "polygon", cls: "hexagon", points: resp.hexagon });
  }
  const hot = farthestLabels(resp);
  if (resp.essential_vertices) {
    for (const ev of resp.essential_vertices) {
      const isFar = hot.includes(ev.label);
      shapes.push({
        tag: "circle",
        cls: isFar ? "essential-vertex farthest" : "essential-vertex",
        center: [ev.x, ev.y],
        r: isFar ? 0.09 : 0.055,
        label: ev.label,
      });
    }
  }
  return shapes;
}

// --- fundamental-domain panel ----------------------------------------------

export function buildDomainOverlay(
  resp: PointResponse | null,
  state: ViewState,
  curveJ: CurveJResponse | null,
  limitSet: LimitSetResponse | null,
): Shape[] {
  const shapes: Shape[] = [];
  if (state.showLimitSet && limitSet) {
    for (const seg of limitSet.segments) {
      shapes.push({
        tag: "line",
        cls: `limit-set limit-${seg.kind}`,
        points: [seg.a, seg.b],
      });
    }
  }
  if (state.showCurveJ && curveJ) {
    shapes.push({ tag: "polyline", cls: "curve-j", points: curveJ.points });
  }
  if (resp) {
    if (state.showOrbit && resp.orbit) {
      shapes.push({
        tag: "polyline",
        cls: "orbit-trail",
        points: resp.orbit.points,
      });
      for (const [x, y] of resp.orbit.points) {
        shapes.push({ tag: "circle", cls: "orbit-step", center: [x, y], r: 0.004 });
      }
    }
    for (const img of resp.f_image) {
      shapes.push({ tag: "circle", cls: "f-image", center: img, r: 0.008 });
    }
    shapes.push({
      tag: "circle",
      cls: "probe",
      center: [resp.fundamental.x, resp.fundamental.y],
      r: 0.01,
    });
  }
  return shapes;
}

// --- net panel ---------------------------------------------------------------

export function buildNetOverlay(resp: PointResponse | null): Shape[] {
  const shapes: Shape[] = [];
  if (!resp) return shapes;
  shapes.push({
    tag: "circle",
    cls: "probe",
    center: [resp.query.x, resp.query.y],
    r: 0.07,
    face: resp.query.face,
  });
  resp.farthest.points.forEach((q, i) => {
    shapes.push({
      tag: "circle",
      cls: `farthest-marker farthest-${i}`,
      center: [q.x, q.y],
      r: 0.09,
      face: q.face,
    });
  });
  return shapes;
}
