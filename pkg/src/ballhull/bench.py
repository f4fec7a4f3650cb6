"""Backend benchmark: numba kernels against the pure numpy/Python fallback.

Times the circle-intersection kernel and the full ball-intersection build
on seeded uniform instances under both backends and prints the speedup.

    python -m ballhull.bench --sizes 4096 16384 --reps 3
"""

import argparse
import time

import numpy as np

from . import _kernels
from .chains import build_ball_intersection
from .chebyshev import diameter
from .norms import NormPlane


def _median_time(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return sorted(times)[len(times) // 2]


def bench_intersections(plane, count, reps, rng):
    c1 = rng.uniform(0.0, 10.0, size=(count, 2))
    c2 = c1 + rng.uniform(-1.5, 1.5, size=(count, 2))
    lam = 1.0

    def run():
        for (ax, ay), (bx, by) in zip(c1, c2):
            _kernels.circle_intersections(ax, ay, bx, by, lam, plane.p)

    run()  # warm the jit before timing
    return _median_time(run, reps)


def bench_bi(plane, n, reps, rng):
    pts = [tuple(q) for q in rng.uniform(0.0, 10.0, size=(n, 2))]
    lam = 1.1 * diameter(plane, pts)

    def run():
        build_ball_intersection(plane, pts, lam)

    run()
    return _median_time(run, reps)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[4096, 16384])
    parser.add_argument("--intersections", type=int, default=20000)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--p", type=float, default=3.0)
    args = parser.parse_args(argv)

    plane = NormPlane(args.p)
    backends = _kernels.available_backends()
    if "numba" not in backends:
        print("numba not importable; timing the numpy backend only")

    rows = []
    for backend in backends:
        _kernels.use_backend(backend)
        rng = np.random.default_rng(args.seed)
        t_int = bench_intersections(plane, args.intersections, args.reps, rng)
        row = {"backend": backend, f"intersect x{args.intersections}": t_int}
        for n in args.sizes:
            row[f"bi n={n}"] = bench_bi(plane, n, args.reps, rng)
        rows.append(row)

    cols = list(rows[0].keys())
    widths = [max(len(c), 12) for c in cols]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
    for row in rows:
        cells = [str(row["backend"]).ljust(widths[0])]
        cells += [f"{row[c]:.4f}s".ljust(w) for c, w in zip(cols[1:], widths[1:])]
        print("  ".join(cells))
    if len(rows) == 2:
        for c in cols[1:]:
            ratio = rows[1][c] / rows[0][c] if rows[0][c] > 0 else float("inf")
            print(f"speedup {c}: {ratio:.2f}x (numpy/numba)")
    _kernels.use_backend(backends[0])


if __name__ == "__main__":
    main()
