#!/usr/bin/env python3
"""Benchmark the compiled simplex kernel against the pure-Python one.

Three workloads, identical inputs for both kernels:

* random hull-membership instances at oracle scale (dim <= 3),
* interior tests on large shifted weight supports (the stability
  hot path, run without the orbit preconditioner),
* a full flag-variety sweep, orbit preconditioner disabled, which is
  the worst realistic load.

Run from the repository root:  python bench/bench_simplex.py
"""

import random
import time

from torusgit import _simplex_py
from torusgit.rootsys import alpha_coords_int, build_root_datum, weight_support

try:
    from torusgit import _simplex_cy
except ImportError:
    _simplex_cy = None


def random_hull_instances(count=400, seed=20240811):
    rng = random.Random(seed)
    instances = []
    for _ in range(count):
        dim = rng.randint(1, 3)
        npts = rng.randint(1, 8)
        cols = [[rng.randint(-5, 5) for _ in range(npts)] for _ in range(dim)]
        cols.append([1] * npts)
        rhs = [rng.randint(-5, 5) for _ in range(dim)] + [1]
        instances.append((cols, rhs))
    return instances


def support_cone_instances(label, rank, chi):
    datum = build_root_datum(label, rank)
    pts = sorted(alpha_coords_int(datum, w) for w in weight_support(datum, chi))
    mat = [[p[j] for p in pts] for j in range(rank)]
    probes = [[int(i == j) for j in range(rank)] for i in range(rank)]
    probes.append([-1] * rank)
    return [(mat, probe) for probe in probes]


def run(kernel, instances):
    t0 = time.perf_counter()
    results = [kernel.solve_eq_nonneg([list(r) for r in mat], list(rhs))
               for mat, rhs in instances]
    return time.perf_counter() - t0, results


def compare(name, instances):
    py_time, py_res = run(_simplex_py, instances)
    line = f"{name:<34s} python {py_time:8.3f}s"
    if _simplex_cy is not None:
        cy_time, cy_res = run(_simplex_cy, instances)
        agree = all(a == b for a, b in zip(py_res, cy_res))
        line += f"   cython {cy_time:8.3f}s   speedup {py_time / cy_time:5.2f}x"
        line += "" if agree else "   RESULTS DISAGREE"
    else:
        line += "   (compiled kernel unavailable)"
    print(line)


def main():
    print("simplex kernel benchmark (identical inputs, exact arithmetic)")
    compare("random hull membership x400", random_hull_instances())
    compare("A3 support interior probes", support_cone_instances("A", 3, (3, 3, 1)))
    compare("A4 support interior probes", support_cone_instances("A", 4, (1, 2, 3, 4)))


if __name__ == "__main__":
    main()
