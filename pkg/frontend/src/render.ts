// SVG DOM rendering of the shape descriptors produced by overlays.ts.

import type { Shape } from "./overlays.js";
import {
  Viewport,
  netFaceTriangle,
  netPosition,
  pointsAttr,
  toScreen,
} from "./transform.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
  return node;
}

function place(shape: Shape, v: Viewport, useNet: boolean): SVGElement | null {
  const map = (p: [number, number]): [number, number] => {
    const data = useNet && shape.face !== undefined
      ? netPosition(shape.face, p[0], p[1])
      : p;
    return toScreen(v, data[0], data[1]);
  };
  const scale = v.width / (v.xmax - v.xmin);
  if (shape.tag === "circle" && shape.center) {
    const [cx, cy] = map(shape.center);
    const node = el("circle", {
      class: shape.cls,
      cx,
      cy,
      r: (shape.r ?? 0.01) * scale,
    });
    if (shape.label) node.setAttribute("data-label", shape.label);
    return node;
  }
  if (shape.points) {
    const mapped = shape.points.map(map);
    const attr = mapped.map((q) => q.map((c) => c.toFixed(2)).join(",")).join(" ");
    if (shape.tag === "polygon") {
      const node = el("polygon", { class: shape.cls, points: attr });
      if (shape.label) node.setAttribute("data-label", shape.label);
      return node;
    }
    if (shape.tag === "polyline") {
      return el("polyline", { class: shape.cls, points: attr });
    }
    if (shape.tag === "line" && mapped.length === 2) {
      return el("line", {
        class: shape.cls,
        x1: mapped[0][0],
        y1: mapped[0][1],
        x2: mapped[1][0],
        y2: mapped[1][1],
      });
    }
  }
  return null;
}

export function renderShapes(
  svg: SVGSVGElement,
  layerClass: string,
  shapes: Shape[],
  v: Viewport,
  useNet = false,
): void {
  let layer = svg.querySelector(`:scope > g.${layerClass}`);
  if (!layer) {
    layer = el("g", { class: layerClass });
    svg.appendChild(layer);
  }
  layer.replaceChildren();
  for (const shape of shapes) {
    const node = place(shape, v, useNet);
    if (node) layer.appendChild(node);
    if (shape.tag === "circle" && shape.center && shape.label && !useNet) {
      const [cx, cy] = toScreen(v, shape.center[0], shape.center[1]);
      const text = el("text", { class: "vertex-label", x: cx + 8, y: cy - 8 });
      text.textContent = shape.label;
      layer.appendChild(text);
    }
  }
}

export function renderStaticDomain(svg: SVGSVGElement, v: Viewport): void {
  const tri: [number, number][] = [
    [0, 0],
    [1, 0],
    [0.25, Math.sqrt(3) / 4],
  ];
  const layer = el("g", { class: "static" });
  layer.appendChild(el("polygon", { class: "domain-outline", points: pointsAttr(v, tri) }));
  svg.appendChild(layer);
}

export function renderStaticNet(svg: SVGSVGElement, v: Viewport): void {
  const layer = el("g", { class: "static" });
  for (let face = 0; face < 8; face += 1) {
    const tri = netFaceTriangle(face);
    const node = el("polygon", {
      class: `net-face net-face-${face}`,
      points: pointsAttr(v, tri),
      "data-face": face,
    });
    layer.appendChild(node);
    const centroid = tri.reduce(
      (acc, p) => [acc[0] + p[0] / 3, acc[1] + p[1] / 3] as [number, number],
      [0, 0] as [number, number],
    );
    const [tx, ty] = toScreen(v, centroid[0], centroid[1]);
    const label = el("text", { class: "net-label", x: tx, y: ty });
    label.textContent = String(face);
    layer.appendChild(label);
  }
  svg.appendChild(layer);
}

export function renderReadouts(
  container: HTMLElement,
  readouts: { key: string; label: string; value: string; tone?: string }[],
): void {
  container.replaceChildren();
  for (const r of readouts) {
    const row = document.createElement("div");
    row.className = `readout tone-${r.tone ?? "neutral"}`;
    row.dataset.key = r.key;
    const label = document.createElement("span");
    label.className = "readout-label";
    label.textContent = r.label;
    const value = document.createElement("span");
    value.className = "readout-value";
    value.textContent = r.value;
    row.append(label, value);
    container.appendChild(row);
  }
}
