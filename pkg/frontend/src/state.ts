// View state and input scheduling.  Toggles only affect visibility;
// the numeric content always comes from the last service response.

export interface ViewState {
  showHexagon: boolean;
  showCells: boolean;
  showCurveJ: boolean;
  showLimitSet: boolean;
  showOrbit: boolean;
  orbitLength: number;
}

export function initialViewState(): ViewState {
  return {
    showHexagon: true,
    showCells: true,
    showCurveJ: true,
    showLimitSet: false,
    showOrbit: false,
    orbitLength: 24,
  };
}

export type Toggle = Exclude<keyof ViewState, "orbitLength">;

export function withToggle(state: ViewState, key: Toggle, value: boolean): ViewState {
  return { ...state, [key]: value };
}

export function withOrbitLength(state: ViewState, n: number): ViewState {
  const clamped = Math.max(1, Math.min(500, Math.round(n)));
  return { ...state, orbitLength: clamped };
}

/** Trailing-edge debounce; the last call within the window wins. */
export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  waitMs: number,
  timers: { set: typeof setTimeout; clear: typeof clearTimeout } = {
    set: setTimeout.bind(globalThis),
    clear: clearTimeout.bind(globalThis),
  },
): (...args: A) => void {
  let handle: ReturnType<typeof setTimeout> | undefined;
  return (...args: A) => {
    if (handle !== undefined) timers.clear(handle);
    handle = timers.set(() => {
      handle = undefined;
      fn(...args);
    }, waitMs);
  };
}

/** Latest-wins request gate: aborts the previous in-flight query. */
export class LatestWins {
  private controller: AbortController | null = null;

  next(): AbortSignal {
    if (this.controller) this.controller.abort();
    this.controller = new AbortController();
    return this.controller.signal;
  }
}
