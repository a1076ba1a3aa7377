"""Time the compiled and numpy kernel backends on large grids.

    python3 benchmarks/bench_kernels.py [--n 200000] [--repeat 5]
"""
import argparse
import math
import timeit

import numpy as np

from slopegen import kernels
from slopegen.audit import EXAMPLES
from slopegen.slope_surfaces import SurfaceSpec, evaluate, verify


def inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    p = rng.uniform(-2, 2, (n, 4))
    q = rng.uniform(-2, 2, (n, 4))
    u = rng.uniform(-2, 2, (n, 3))
    v = rng.uniform(-2, 2, (n, 3))
    w = rng.uniform(-2, 2, (n, 3))
    # unit timelike rotors
    a, b, c = rng.uniform(-math.pi, math.pi, n), rng.uniform(-1, 1, n), rng.uniform(-math.pi, math.pi, n)
    r = np.stack([np.cosh(b) * np.cos(a), np.cosh(b) * np.sin(a), np.sinh(b) * np.cos(c), np.sinh(b) * np.sin(c)], 1)
    return p, q, u, v, w, np.ascontiguousarray(r)


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=200_000, help="rows per kernel call")
    ap.add_argument("--grid", type=int, default=400, help="verify grid side")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = kernels.available()
    if "compiled" not in backends:
        print("compiled extension not built; timing the numpy backend only")
    p, q, u, v, w, r = inputs(args.n)
    m = backends["python"].sandwich_matrices(r)

    cases = {
        "qmul": lambda k: k.qmul(p, q),
        "quadratic_forms": lambda k: k.quadratic_forms(p),
        "sandwich_matrices": lambda k: k.sandwich_matrices(r),
        "matvec": lambda k: k.matvec(m, u),
        "cross": lambda k: k.cross(u, v),
        "lorentz_defects": lambda k: k.lorentz_defects(m),
        "slope_terms": lambda k: k.slope_terms(u, v, w),
    }
    names = sorted(backends)
    print(f"n = {args.n} rows, best of {args.repeat}")
    print(f"{'kernel':<20}" + "".join(f"{b:>14}" for b in names) + ("    speedup" if len(names) > 1 else ""))
    for label, fn in cases.items():
        times = {b: best(lambda: fn(backends[b]), args.repeat) for b in names}
        row = f"{label:<20}" + "".join(f"{times[b] * 1e3:>11.2f} ms" for b in names)
        if len(names) > 1:
            row += f"   {times['python'] / times['compiled']:>7.1f}x"
        print(row)

    ex = EXAMPLES["timelike-cone"]
    spec = SurfaceSpec(ex.case, ex.theta, ex.curve, (0.25, 3.0), (-2.0, 2.0), args.grid, args.grid)
    print(f"\nend to end on a {args.grid}x{args.grid} grid")
    for label, fn in (("evaluate", evaluate), ("verify", verify)):
        times = {b: best(lambda: fn(spec, backend=b), max(1, args.repeat // 2)) for b in names}
        row = f"{label:<20}" + "".join(f"{times[b] * 1e3:>11.2f} ms" for b in names)
        if len(names) > 1:
            row += f"   {times['python'] / times['compiled']:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
