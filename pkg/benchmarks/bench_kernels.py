#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-NumPy fallback.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import time

import numpy as np

from hazelab import _kernels_np

try:
    from hazelab import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def run_case(name, make_args, fn_name, repeats):
    args = make_args()
    t_np = best_of(lambda: getattr(_kernels_np, fn_name)(*args), repeats)
    row = f"{name:<42} numpy {t_np * 1e3:9.2f} ms"
    if _kernels is not None:
        t_c = best_of(lambda: getattr(_kernels, fn_name)(*args), repeats)
        row += f"   compiled {t_c * 1e3:9.2f} ms   speedup {t_np / t_c:6.2f}x"
        got_c = getattr(_kernels, fn_name)(*args)
        got_np = getattr(_kernels_np, fn_name)(*args)
        assert np.array_equal(got_c, got_np), f"{name}: backends disagree"
    print(row)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    if _kernels is None:
        print("compiled extension not available; timing the fallback only")

    for size in (256, 512, 1024):
        img = rng.random((size, size))
        for radius in (7, 31):
            run_case(f"windowed_min {size}x{size} radius {radius}",
                     lambda i=img, r=radius: (i, r), "windowed_min",
                     args.repeats)

    dirs = rng.standard_normal((1000, 3))
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    for n in (65_536, 262_144):
        vecs = rng.standard_normal((n, 3))
        run_case(f"nearest_direction {n} x 1000 dirs",
                 lambda v=vecs, d=dirs: (v, d), "nearest_direction",
                 args.repeats)


if __name__ == "__main__":
    main()
