// Typed client for the octafar explorer service.  The UI renders the
// numeric fields of these payloads verbatim; no geometry is recomputed
// client-side.

export interface SurfacePointDto {
  face: number;
  x: number;
  y: number;
}

export interface FoldSymmetryDto {
  face: number;
  rotation: number;
  reflect: boolean;
}

export interface OrbitDto {
  points: [number, number][];
  terminated_by: string;
  limit_distance_to_boundary: number;
  limit_fixed_point: [number, number] | null;
  limit_multiplier: number | null;
}

export interface EssentialVertexDto {
  label: string;
  x: number;
  y: number;
}

export interface VoronoiCellDto {
  index: number;
  polygon: [number, number][];
}

export interface PointResponse {
  schema_version: number;
  query: SurfacePointDto;
  fundamental: { x: number; y: number; symmetry: FoldSymmetryDto };
  region: string;
  g_value: number;
  f_image: [number, number][];
  farthest: {
    distance: number;
    points: SurfacePointDto[];
    chart_points: [number, number][];
  };
  hexagon: [number, number][] | null;
  voronoi_cells: VoronoiCellDto[] | null;
  essential_vertices: EssentialVertexDto[] | null;
  orbit?: OrbitDto;
}

export interface CurveJResponse {
  schema_version: number;
  root_r: number;
  points: [number, number][];
}

export interface LimitSetSegment {
  kind: string;
  a: [number, number];
  b: [number, number];
}

export interface LimitSetResponse {
  schema_version: number;
  per_face: boolean;
  segments: LimitSetSegment[];
}

export interface PointQuery {
  face: number;
  x: number;
  y: number;
  orbit?: number;
  branch?: "left" | "right";
}

export function pointUrl(base: string, q: PointQuery): string {
  const params = new URLSearchParams({
    face: String(q.face),
    x: String(q.x),
    y: String(q.y),
  });
  if (q.orbit !== undefined) params.set("orbit", String(q.orbit));
  if (q.branch !== undefined) params.set("branch", q.branch);
  return `${base}/api/point?${params.toString()}`;
}

export class ApiClient {
  constructor(
    private base: string = "",
    private fetchFn: typeof fetch = fetch.bind(globalThis),
  ) {}

  async point(q: PointQuery, signal?: AbortSignal): Promise<PointResponse> {
    const res = await this.fetchFn(pointUrl(this.base, q), { signal });
    if (!res.ok) throw new Error(`point query failed: ${res.status}`);
    return (await res.json()) as PointResponse;
  }

  async curveJ(samples = 256): Promise<CurveJResponse> {
    const res = await this.fetchFn(`${this.base}/api/curve_j?samples=${samples}`);
    if (!res.ok) throw new Error(`curve_j failed: ${res.status}`);
    return (await res.json()) as CurveJResponse;
  }

  async limitSet(): Promise<LimitSetResponse> {
    const res = await this.fetchFn(`${this.base}/api/limit_set`);
    if (!res.ok) throw new Error(`limit_set failed: ${res.status}`);
    return (await res.json()) as LimitSetResponse;
  }
}
