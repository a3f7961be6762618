"""Compare the compiled and pure solve kernels on the exhaustive sweep.

Run: python3 benchmarks/bench_kernel.py [--max-d 14]

The sweep table is the hot loop behind the oracle-agreement and self-play
acceptance runs; everything else in the package is feature bookkeeping.
"""

from __future__ import annotations

import argparse
import time

from paritygame import _kernel_py

try:
    from paritygame import _speedups
except ImportError:
    _speedups = None


def time_sweep(impl, d: int, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        impl.sweep_table(d, d)
        best = min(best, time.perf_counter() - t0)
    return best


def time_single(impl, d: int, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        impl.forcible_mask(d, 0, 0, d)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-d", type=int, default=14)
    args = parser.parse_args()

    print(f"{'d':>3}  {'pure sweep':>12}  {'compiled sweep':>15}  {'speedup':>8}")
    for d in range(8, args.max_d + 1, 2):
        pure = time_sweep(_kernel_py, d)
        if _speedups is not None:
            fast = time_sweep(_speedups, d)
            print(f"{d:>3}  {pure * 1e3:>10.1f}ms  {fast * 1e3:>13.2f}ms  {pure / fast:>7.1f}x")
        else:
            print(f"{d:>3}  {pure * 1e3:>10.1f}ms  {'(not built)':>15}  {'-':>8}")

    d = args.max_d
    pure = time_single(_kernel_py, d)
    line = f"single solve (empty board, d={d}): pure {pure * 1e3:.1f}ms"
    if _speedups is not None:
        fast = time_single(_speedups, d)
        line += f", compiled {fast * 1e3:.2f}ms ({pure / fast:.1f}x)"
    print(line)

    # both implementations must agree bit for bit
    for d in (6, 9, 11):
        if _speedups is not None:
            assert _speedups.sweep_table(d, d) == _kernel_py.sweep_table(d, d)
    print("agreement check: ok" if _speedups is not None else "agreement check: skipped")


if __name__ == "__main__":
    main()
