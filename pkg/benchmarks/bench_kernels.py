#!/usr/bin/env python3
"""Benchmark of the unfolding-distance kernel backends.

Times the coarse oracle pass (all faces, full grid) and a scalar-query
workload for every importable backend, then reports the speedup of the
compiled kernel over the numpy fallback.

    python benchmarks/bench_kernels.py [--h 0.01] [--repeat 5]
"""

import argparse
import statistics
import time

from octafar._kernels import backends
from octafar.surface import SurfacePoint, build_model
from octafar.unfolding import _cache_for, _chart_grid, farthest_oracle


def bench_grid_pass(mod, model, probe, qx, qy, repeat):
    cache = _cache_for(model)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for tgt in range(8):
            b = cache.bundles(probe.face, 7)[tgt]
            mod.min_unfold_distances(
                probe.z.real, probe.z.imag,
                b.cand, b.gates, b.offsets, qx, qy, 1e-9,
            )
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--h", type=float, default=0.01, help="grid spacing")
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    model = build_model()
    probe = SurfacePoint(0, complex(0.33, 0.1))
    qx, qy = _chart_grid(args.h)
    n_points = qx.shape[0] * 8

    print(f"grid spacing h = {args.h}  ({n_points} query points over 8 faces)")
    print(f"{'backend':<10} {'best':>10} {'median':>10}")
    results = {}
    for name, mod in backends().items():
        best, med = bench_grid_pass(mod, model, probe, qx, qy, args.repeat)
        results[name] = best
        print(f"{name:<10} {best * 1e3:>8.1f}ms {med * 1e3:>8.1f}ms")
    if "cython" in results and "python" in results:
        print(f"speedup (compiled over numpy): {results['python'] / results['cython']:.1f}x")

    t0 = time.perf_counter()
    value, maxers = farthest_oracle(model, probe, h=args.h)
    dt = time.perf_counter() - t0
    print(
        f"full farthest_oracle call (active backend): {dt * 1e3:.1f}ms, "
        f"value {value:.9g}, {len(maxers)} cluster(s)"
    )


if __name__ == "__main__":
    main()
