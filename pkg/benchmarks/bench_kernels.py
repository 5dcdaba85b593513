#!/usr/bin/env python3
"""Benchmark the compiled sampling kernels against the pure-Python fallback.

Both backends consume the same RNG stream, so their outputs are identical;
this script measures only the speed difference on the two hot loops
(preferential-attachment generation and random-walk stepping).

Usage: python benchmarks/bench_kernels.py [--nodes 100000] [--m 10]
"""

import argparse
import time

import numpy as np

from degreerank import _pykernels
from degreerank.generator import BaConfig, generate_ba

try:
    from degreerank import _speedups
except ImportError:
    _speedups = None


def time_call(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nodes", type=int, default=100_000)
    parser.add_argument("--m", type=int, default=10)
    parser.add_argument("--walk-samples", type=int, default=10_000)
    args = parser.parse_args()

    if _speedups is None:
        print("compiled extension not built; showing pure-Python timings only")

    rows = []

    impls = [("python", _pykernels)] + ([("cython", _speedups)] if _speedups else [])
    outputs = {}
    for name, impl in impls:
        secs, out = time_call(impl.ba_edges, args.nodes, 10, args.m, 12345)
        rows.append((f"ba_edges n={args.nodes} m={args.m}", name, secs))
        outputs[name] = out
    if _speedups is not None:
        assert all(
            np.array_equal(a, b) for a, b in zip(outputs["python"], outputs["cython"])
        ), "backend outputs diverged"

    g = generate_ba(BaConfig(n=args.nodes, n0=10, m=args.m, rng_seed=12345))
    indptr, indices = g.csr()
    outputs = {}
    for name, impl in impls:
        secs, out = time_call(
            impl.walk_nodes, indptr, indices, -1, 1000, 10, args.walk_samples, 99
        )
        rows.append((f"walk_nodes samples={args.walk_samples} thin=10", name, secs))
        outputs[name] = out
    if _speedups is not None:
        assert np.array_equal(outputs["python"], outputs["cython"])

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'backend':<8} {'seconds':>10}")
    for kernel, backend, secs in rows:
        print(f"{kernel:<{width}}  {backend:<8} {secs:>10.4f}")
    if _speedups is not None:
        for kernel in dict.fromkeys(r[0] for r in rows):
            py = next(s for k, b, s in rows if k == kernel and b == "python")
            cy = next(s for k, b, s in rows if k == kernel and b == "cython")
            print(f"speedup {kernel}: {py / cy:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
