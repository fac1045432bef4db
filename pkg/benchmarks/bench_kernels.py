#!/usr/bin/env python3
"""Time the numba kernels against the numpy fallbacks on the same inputs.

Usage: python3 benchmarks/bench_kernels.py [--n 2000] [--repeat 5]
"""
import argparse
import time

import numpy as np

from curvtess import kernels
from curvtess.automorphism import cellular_automorphisms
from curvtess.generators import grid_example, stacked_prism


def best_of(fn, repeat):
    fn()  # warm-up, includes jit compilation
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=2000, help="prism size")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    m = stacked_prism(args.n, 8)
    g = grid_example(60, 60)
    print(f"prism map: {m.n_darts} darts; grid map: {g.n_darts} darts")

    rows = []
    for backend, ks in kernels.KERNELS.items():
        trace = best_of(lambda: ks["trace_faces"](m.face_next), args.repeat)
        prop = best_of(lambda: ks["propagate"](m.rev, m.rnext, m.rev, m.rnext, m.rprev, 0, 0, False), args.repeat)
        bfs = best_of(lambda: ks["bfs_within"](g.first, g.target, 0, -1), args.repeat)
        rows.append((backend, trace, prop, bfs))

    # Results must agree before timings mean anything.
    a, b = kernels.KERNELS["numba"], kernels.KERNELS["numpy"]
    assert np.array_equal(a["trace_faces"](m.face_next), b["trace_faces"](m.face_next))
    assert np.array_equal(a["bfs_within"](g.first, g.target, 0, 5), b["bfs_within"](g.first, g.target, 0, 5))

    print(f"{'backend':8} {'trace_faces':>12} {'propagate':>12} {'bfs_within':>12}")
    for name, *ts in rows:
        print(f"{name:8} " + " ".join(f"{t * 1e3:10.3f}ms" for t in ts))
    base = rows[1]
    print("speedup  " + " ".join(f"{base[i] / rows[0][i]:11.1f}x" for i in (1, 2, 3)))

    t = time.perf_counter()
    grp = cellular_automorphisms(stacked_prism(200, 2))
    print(f"aut(stacked prism 200x2) order {grp.order} in {time.perf_counter() - t:.3f}s on {kernels.BACKEND}")


if __name__ == "__main__":
    main()
