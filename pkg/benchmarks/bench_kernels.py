#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the three hot operations -- truncated convolution, series
inversion and the partition statistic sweep -- on both backends and
prints the speedup.  Run from the repository root:

    python benchmarks/bench_kernels.py [--order 600] [--sweep-n 45] [--repeat 3]
"""

import argparse
import time

from partitionlab import _kernels_py
from partitionlab.series import euler_product, partition_gf

try:
    from partitionlab import _speedups
except ImportError:
    _speedups = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=600)
    parser.add_argument("--sweep-n", type=int, default=45, dest="sweep_n")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    euler = list(euler_product(args.order).coeffs)
    pgf = list(partition_gf(args.order).coeffs)

    cases = [
        ("convolve (order %d)" % args.order, "convolve", (pgf, pgf)),
        ("invert (order %d)" % args.order, "invert_unit", (euler,)),
        (
            "stat sweep (n=%d, k<=6)" % args.sweep_n,
            "ab_stat_sums",
            (args.sweep_n, 6),
        ),
    ]

    print("%-28s %12s %12s %9s" % ("kernel", "pure [s]", "compiled [s]", "speedup"))
    for label, name, call_args in cases:
        pure_fn = getattr(_kernels_py, name)
        t_pure = best_of(lambda: pure_fn(*call_args), args.repeat)
        if _speedups is None:
            print("%-28s %12.4f %12s %9s" % (label, t_pure, "n/a", "n/a"))
            continue
        fast_fn = getattr(_speedups, name)
        t_fast = best_of(lambda: fast_fn(*call_args), args.repeat)
        print(
            "%-28s %12.4f %12.4f %8.1fx"
            % (label, t_pure, t_fast, t_pure / t_fast if t_fast else float("inf"))
        )
        if fast_fn(*call_args) != pure_fn(*call_args):
            raise SystemExit("backend results disagree for %s" % name)

    if _speedups is None:
        print("\ncompiled extension not built; showing pure timings only")


if __name__ == "__main__":
    main()
