// Presentation constants: a development-consistent band net of the
// eight faces (face chain 0,1,4,7,5,3,6,2 unfolded edge to edge).
// Generated from the model's gluing data; treated as layout only.

export interface NetTransform {
  face: number;
  w: [number, number];  // rotation as a unit complex number
  c: [number, number];  // translation
}

export const NET_WIDTH = 7.6;
export const NET_HEIGHT = 2.698076211353316;

export const CHART_VERTICES: [number, number][] = [
  [1.0, 0.0],
  [-0.5, 0.8660254037844386],
  [-0.5, -0.8660254037844386],
];

export const NET_TRANSFORMS: NetTransform[] = [
  { face: 0, w: [1.0, 0.0], c: [6.55, 1.7820508075688772] },
  { face: 1, w: [-1.0, 0.0], c: [5.55, 1.7820508075688772] },
  { face: 2, w: [0.49999999999999967, 0.8660254037844385], c: [1.0499999999999998, 0.9160254037844385] },
  { face: 3, w: [-0.9999999999999998, -1.1102230246251565e-16], c: [2.55, 1.782050807568877] },
  { face: 4, w: [-0.5, 0.8660254037844386], c: [5.05, 0.9160254037844386] },
  { face: 5, w: [0.9999999999999998, 1.1102230246251565e-16], c: [3.55, 1.782050807568877] },
  { face: 6, w: [-0.5, 0.8660254037844384], c: [2.05, 0.9160254037844386] },
  { face: 7, w: [0.4999999999999999, 0.8660254037844386], c: [4.05, 0.9160254037844386] },
];
