#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Two workloads: the raw orientation predicate on small random rationals
(the instance-scale regime with the machine-integer fast path), and full
broken-line constructions whose intermediate coordinates grow past it.

Run:  python benchmarks/bench_kernels.py
"""

import random
import time
from fractions import Fraction

from polyattain import _core_py

try:
    from polyattain import _core
except ImportError:
    _core = None

from polyattain.geometry import Point
from polyattain.gen import random_convex_polygon, random_interior_inner


def _orient_args(rng, bits):
    out = []
    for _ in range(6):
        n = rng.randint(-(1 << bits), 1 << bits)
        d = rng.randint(1, 1 << bits)
        out.extend((n, d))
    return tuple(out)


def bench_orient(impl, cases, repeat=5):
    f = impl.orient_sign
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in cases:
            f(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_blc(impl, instances, repeat=3):
    """Time the BLC workload with the given kernel patched into geometry."""
    import polyattain.geometry as geometry
    from polyattain.polygon import BoundaryPoint, Polygon
    from polyattain.poncelet import blc

    saved = geometry.orient_sign, geometry.dot_sign
    geometry.orient_sign, geometry.dot_sign = impl.orient_sign, impl.dot_sign
    try:
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            for P, Pp, starts in instances:
                P = Polygon(tuple(Point(v.x, v.y) for v in P.vertices))
                Pp = Polygon(tuple(Point(v.x, v.y) for v in Pp.vertices))
                for e, t in starts:
                    blc(P, Pp, BoundaryPoint(P, e, t))
            times.append(time.perf_counter() - t0)
        return min(times)
    finally:
        geometry.orient_sign, geometry.dot_sign = saved


def main():
    rng = random.Random(2024)
    print(f"compiled backend available: {_core is not None}")

    for bits, label in ((10, "small coords (int128 fast path)"), (60, "large coords (bignum path)")):
        cases = [_orient_args(rng, bits) for _ in range(20000)]
        t_py = bench_orient(_core_py, cases)
        line = f"orient_sign, {label}: python {t_py * 1e6 / len(cases):8.3f} us/call"
        if _core is not None:
            t_c = bench_orient(_core, cases)
            line += f" | compiled {t_c * 1e6 / len(cases):8.3f} us/call | speedup x{t_py / t_c:.2f}"
        print(line)

    instances = []
    for _ in range(60):
        n = rng.randint(4, 8)
        P = random_convex_polygon(rng, n)
        Pp = random_interior_inner(rng, P)
        starts = [(rng.randrange(n), Fraction(rng.randint(0, 15), 16)) for _ in range(20)]
        instances.append((P, Pp, starts))
    t_py = bench_blc(_core_py, instances)
    line = f"broken line construction workload: python {t_py:8.3f} s"
    if _core is not None:
        t_c = bench_blc(_core, instances)
        line += f" | compiled {t_c:8.3f} s | speedup x{t_py / t_c:.2f}"
    print(line)


if __name__ == "__main__":
    main()
