#!/usr/bin/env python3
"""Throughput comparison of the two enumeration backends.

Sweeps all q^(l*m) matrices with both the numba kernel and the batched numpy
kernel, checks the outputs are bit-identical, and reports matrices/second.

Example:
    python3 bench/benchmark.py --q 2 --l 4 --m 5 --repeats 3
"""

import argparse
import time

import numpy as np

from detcodes.gfield import field_new
from detcodes.kernels import HAVE_NUMBA, slice_stats


def timed_sweep(ell, m, field, backend, repeats):
    total = field.q ** (ell * m)
    best = None
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = slice_stats(ell, m, field, backend=backend)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return result, best, total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--l", type=int, default=4)
    parser.add_argument("--m", type=int, default=5)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    field = field_new(args.q)
    total = args.q ** (args.l * args.m)
    print(f"sweep: q={args.q}, l={args.l}, m={args.m} -> {total} matrices")

    backends = ["numpy"]
    if HAVE_NUMBA:
        # warm up so JIT compilation is not billed to the measurement
        slice_stats(args.l, args.m, field, 0, min(total, 1024), backend="numba")
        backends.insert(0, "numba")
    else:
        print("numba unavailable; benchmarking numpy only")

    results = {}
    for backend in backends:
        (card, nz), best, n = timed_sweep(args.l, args.m, field, backend, args.repeats)
        results[backend] = (card, nz)
        rate = n / best
        print(f"{backend:>6}: best of {args.repeats}: {best:8.3f} s  ({rate:,.0f} matrices/s)")

    if len(results) == 2:
        a, b = results["numba"], results["numpy"]
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
        print("backends agree bit-for-bit")


if __name__ == "__main__":
    main()
