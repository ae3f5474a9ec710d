// Wiring: pointer input -> debounced service queries -> overlay rendering.

import { ApiClient, CurveJResponse, LimitSetResponse, PointResponse } from "./api.js";
import {
  buildDevelopmentOverlay,
  buildDomainOverlay,
  buildNetOverlay,
  buildReadouts,
} from "./overlays.js";
import {
  renderReadouts,
  renderShapes,
  renderStaticDomain,
  renderStaticNet,
} from "./render.js";
import {
  LatestWins,
  ViewState,
  debounce,
  initialViewState,
  withOrbitLength,
  withToggle,
} from "./state.js";
import {
  clampToDomain,
  fromScreen,
  hitNet,
  makeViewport,
  netPosition,
} from "./transform.js";
import { NET_HEIGHT, NET_WIDTH, NET_TRANSFORMS } from "./netlayout.js";

const api = new ApiClient("");
const gate = new LatestWins();

let state: ViewState = initialViewState();
let lastResponse: PointResponse | null = null;
let lastBranches: { left: PointResponse; right: PointResponse } | null = null;
let curveJ: CurveJResponse | null = null;
let limitSet: LimitSetResponse | null = null;

const netOrigin = (() => {
  const xs: number[] = [];
  const ys: number[] = [];
  for (const t of NET_TRANSFORMS) {
    void t;
  }
  for (let f = 0; f < 8; f += 1) {
    for (const [x, y] of [[1, 0], [-0.5, Math.sqrt(3) / 2], [-0.5, -Math.sqrt(3) / 2]]) {
      const [nx, ny] = netPosition(f, x, y);
      xs.push(nx);
      ys.push(ny);
    }
  }
  return { xmin: Math.min(...xs), ymin: Math.min(...ys) };
})();

const domainView = makeViewport(0, -0.02, 1, Math.sqrt(3) / 4, 620);
const netView = makeViewport(
  netOrigin.xmin, netOrigin.ymin,
  netOrigin.xmin + NET_WIDTH, netOrigin.ymin + NET_HEIGHT, 960,
);
const devView = makeViewport(-0.6, -1.0, 4.6, 3.6, 620);

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function svgOf(id: string): SVGSVGElement {
  return $(id) as unknown as SVGSVGElement;
}

function showBanner(message: string | null): void {
  const banner = $("banner");
  if (message) {
    banner.textContent = message;
    banner.classList.add("visible");
  } else {
    banner.classList.remove("visible");
  }
}

function renderAll(): void {
  renderShapes(svgOf("domain-svg"), "overlay", buildDomainOverlay(lastResponse, state, curveJ, limitSet), domainView);
  if (lastResponse) {
    renderShapes(svgOf("dev-svg"), "overlay", buildDevelopmentOverlay(lastResponse, state), devView);
    renderShapes(svgOf("net-svg"), "overlay", buildNetOverlay(lastResponse), netView, true);
    renderReadouts($("readouts"), buildReadouts(lastResponse));
    const fork = $("fork-controls");
    fork.classList.toggle("visible", lastResponse.region === "OnJ");
  }
  if (lastBranches && lastResponse?.region === "OnJ" && state.showOrbit) {
    const trails = [
      ...(lastBranches.left.orbit ? [{ cls: "orbit-trail branch-left", pts: lastBranches.left.orbit.points }] : []),
      ...(lastBranches.right.orbit ? [{ cls: "orbit-trail branch-right", pts: lastBranches.right.orbit.points }] : []),
    ];
    renderShapes(
      svgOf("domain-svg"),
      "branches",
      trails.map((t) => ({ tag: "polyline" as const, cls: t.cls, points: t.pts })),
      domainView,
    );
  } else {
    renderShapes(svgOf("domain-svg"), "branches", [], domainView);
  }
}

async function query(face: number, x: number, y: number): Promise<void> {
  const signal = gate.next();
  try {
    const orbit = state.showOrbit ? state.orbitLength : undefined;
    const resp = await api.point({ face, x, y, orbit }, signal);
    lastResponse = resp;
    lastBranches = null;
    showBanner(null);
    if (resp.region === "OnJ" && state.showOrbit) {
      const [left, right] = await Promise.all([
        api.point({ face, x, y, orbit: state.orbitLength, branch: "left" }),
        api.point({ face, x, y, orbit: state.orbitLength, branch: "right" }),
      ]);
      lastBranches = { left, right };
    }
    renderAll();
  } catch (err) {
    if ((err as Error).name === "AbortError") return;
    showBanner(`service unavailable: ${(err as Error).message}`);
  }
}

const debouncedQuery = debounce(query, 30);

function bindDomainPointer(): void {
  const svg = svgOf("domain-svg");
  const handler = (ev: PointerEvent) => {
    if (ev.buttons === 0 && ev.type === "pointermove") return;
    const rect = svg.getBoundingClientRect();
    const [x, y] = fromScreen(domainView, ev.clientX - rect.left, ev.clientY - rect.top);
    const [cx, cy] = clampToDomain(x, y);
    debouncedQuery(0, cx, cy);
  };
  svg.addEventListener("pointerdown", handler);
  svg.addEventListener("pointermove", handler);
}

function bindNetPointer(): void {
  const svg = svgOf("net-svg");
  const handler = (ev: PointerEvent) => {
    if (ev.buttons === 0 && ev.type === "pointermove") return;
    const rect = svg.getBoundingClientRect();
    const [nx, ny] = fromScreen(netView, ev.clientX - rect.left, ev.clientY - rect.top);
    const hit = hitNet(nx, ny);
    if (hit) debouncedQuery(hit.face, hit.x, hit.y);
  };
  svg.addEventListener("pointerdown", handler);
  svg.addEventListener("pointermove", handler);
}

function bindControls(): void {
  const toggles: [string, keyof ViewState][] = [
    ["toggle-hexagon", "showHexagon"],
    ["toggle-cells", "showCells"],
    ["toggle-j", "showCurveJ"],
    ["toggle-limit", "showLimitSet"],
    ["toggle-orbit", "showOrbit"],
  ];
  for (const [id, key] of toggles) {
    const box = $(id) as HTMLInputElement;
    box.addEventListener("change", () => {
      state = withToggle(state, key as Exclude<keyof ViewState, "orbitLength">, box.checked);
      if (key === "showOrbit" && lastResponse) {
        const q = lastResponse.query;
        void query(q.face, q.x, q.y);
      } else {
        renderAll();
      }
    });
  }
  const orbitLen = $("orbit-length") as HTMLInputElement;
  orbitLen.addEventListener("change", () => {
    state = withOrbitLength(state, Number(orbitLen.value));
    orbitLen.value = String(state.orbitLength);
    if (state.showOrbit && lastResponse) {
      const q = lastResponse.query;
      void query(q.face, q.x, q.y);
    }
  });
}

async function boot(): Promise<void> {
  renderStaticDomain(svgOf("domain-svg"), domainView);
  renderStaticNet(svgOf("net-svg"), netView);
  const domain = svgOf("domain-svg");
  domain.setAttribute("width", String(domainView.width));
  domain.setAttribute("height", String(domainView.height));
  const net = svgOf("net-svg");
  net.setAttribute("width", String(netView.width));
  net.setAttribute("height", String(netView.height));
  const dev = svgOf("dev-svg");
  dev.setAttribute("width", String(devView.width));
  dev.setAttribute("height", String(devView.height));
  bindDomainPointer();
  bindNetPointer();
  bindControls();
  try {
    [curveJ, limitSet] = await Promise.all([api.curveJ(256), api.limitSet()]);
  } catch (err) {
    showBanner(`service unavailable: ${(err as Error).message}`);
  }
  await query(0, 0.5, 0.1);
}

void boot();
