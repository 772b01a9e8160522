#!/usr/bin/env python3
"""Benchmark the compiled quadrature kernels against the NumPy fallback.

Times the two hot kernels on realistic workloads (sizes matching what the
area quadrature and the J(a) integral actually request), then one
end-to-end area integral through whichever backend is active.

Run:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from conedet import FlatSphereConfig, flat_sphere_area, kernels
from conedet.barnes import _bracket_coefficients
from conedet.kernels import reference

try:
    from conedet.kernels import _fast
except ImportError:
    _fast = None


def timeit(fn, *args, repeats=200):
    fn(*args)  # warm up
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(repeats):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / repeats)
    return best


def bench_product_density():
    rng = np.random.default_rng(0)
    px = [0.0, 1.0, -1.0, 0.5]
    py = [0.0, 0.0, 0.0, 0.8]
    orders = [-0.6, -0.5, -0.5, -0.4]
    rows = []
    for size in (512, 4096, 32768):
        x, y = rng.normal(size=size), rng.normal(size=size)
        t_ref = timeit(reference.product_density, x, y, px, py, orders)
        row = {"kernel": "product_density", "n": size, "python": t_ref}
        if _fast is not None:
            row["cython"] = timeit(_fast.product_density, x, y, px, py, orders)
        rows.append(row)
    return rows


def bench_j_bracket():
    rows = []
    a = 1.5
    x0, coeffs = _bracket_coefficients(a, 1e-14)
    for size in (15, 240, 4096):
        x = np.geomspace(1e-4, 60.0, size)
        t_ref = timeit(reference.j_bracket, x, a, x0, coeffs)
        row = {"kernel": "j_bracket", "n": size, "python": t_ref}
        if _fast is not None:
            row["cython"] = timeit(_fast.j_bracket, x, a, x0, coeffs)
        rows.append(row)
    return rows


def bench_area():
    cfg = FlatSphereConfig(points=[0, 1, -1], orders=[-2 / 3, -2 / 3, -2 / 3])
    t0 = time.perf_counter()
    rep = flat_sphere_area(cfg, 1e-8)
    elapsed = time.perf_counter() - t0
    return rep, elapsed


def main():
    print(f"active backend: {kernels.BACKEND}")
    if _fast is None:
        print("compiled backend not built; timing the fallback only\n")

    header = f"{'kernel':<18}{'n':>8}{'python':>12}{'cython':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for row in bench_product_density() + bench_j_bracket():
        py = row["python"]
        cy = row.get("cython")
        speed = f"{py / cy:9.1f}x" if cy else f"{'-':>10}"
        cy_s = f"{cy * 1e6:10.1f}us" if cy else f"{'-':>12}"
        print(f"{row['kernel']:<18}{row['n']:>8}{py * 1e6:10.1f}us{cy_s}{speed}")

    rep, elapsed = bench_area()
    print(
        f"\nflat_sphere_area tol=1e-8 via {kernels.BACKEND}: "
        f"{elapsed:.3f}s, {rep.evaluations} evaluations, value {rep.value:.12g}"
    )
    print("(set CONEDET_NO_EXT=1 to force the fallback for comparison)")


if __name__ == "__main__":
    main()
