"""Benchmark the compiled assignment kernel against the pure-Python fallback.

Times both implementations of the Jonker-Volgenant solver on random dense
cost matrices and checks that they reach identical objective values.

Usage: python3 benchmarks/kernel_bench.py [--sizes 100,200,500,1000] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from rankalign.solver import HAVE_COMPILED_KERNEL
from rankalign.solver._fallback import lapjv_minimize as lapjv_python

if HAVE_COMPILED_KERNEL:
    from rankalign.solver._kernel import lapjv_minimize as lapjv_compiled


def _objective(cost: np.ndarray, perm: np.ndarray) -> float:
    return float(cost[np.arange(len(perm)), perm].sum())


def _time(fn, cost: np.ndarray, repeats: int) -> tuple[float, float]:
    best = np.inf
    value = np.nan
    for _ in range(repeats):
        start = time.perf_counter()
        perm = fn(cost)
        best = min(best, time.perf_counter() - start)
        value = _objective(cost, perm)
    return best, value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,200,500,1000")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(args.seed)

    if not HAVE_COMPILED_KERNEL:
        print("compiled kernel unavailable; timing fallback only")
    print(f"{'n':>6}  {'python (s)':>12}  {'compiled (s)':>12}  {'speedup':>8}")
    for n in sizes:
        cost = np.ascontiguousarray(rng.random((n, n)))
        t_py, v_py = _time(lapjv_python, cost, args.repeats)
        if HAVE_COMPILED_KERNEL:
            t_c, v_c = _time(lapjv_compiled, cost, args.repeats)
            if abs(v_py - v_c) > 1e-9:
                raise AssertionError(
                    f"objective mismatch at n={n}: python {v_py} vs compiled {v_c}"
                )
            print(f"{n:>6}  {t_py:>12.4f}  {t_c:>12.4f}  {t_py / t_c:>7.1f}x")
        else:
            print(f"{n:>6}  {t_py:>12.4f}  {'-':>12}  {'-':>8}")


if __name__ == "__main__":
    main()
