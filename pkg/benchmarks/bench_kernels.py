#!/usr/bin/env python3
"""Compare the pure-Python and compiled pivot kernels.

Two views: a micro-benchmark of the pivot loop itself on multiplier-LP
sized tableaus, and wall time of a full `eval --model mo` run in a child
interpreter per backend (FUZZYDEA_PURE toggles the fallback).

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import os
import statistics
import subprocess
import sys
import time

import numpy as np

from fuzzydea._speedups import fast_pivot_loop, pure_pivot_loop


def make_tableau(rng, m, n):
    """Feasible-start max c@x s.t. Ax <= b tableau, like a phase-2 CCR solve."""
    A = rng.uniform(0.1, 2.0, size=(m, n))
    b = rng.uniform(1.0, 5.0, size=m)
    c = rng.uniform(0.1, 1.0, size=n)
    T = np.zeros((m + 1, n + m + 1))
    T[:m, :n] = A
    T[:m, n : n + m] = np.eye(m)
    T[:m, -1] = b
    T[m, :n] = -c
    basis = np.arange(n, n + m, dtype=np.int64)
    return np.ascontiguousarray(T), basis


def time_kernel(kernel, tableaus, repeats):
    runs = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        for T, basis in tableaus:
            kernel(T.copy(), basis.copy(), 1e-9, 10_000)
        runs.append(time.perf_counter() - t0)
    return min(runs) / len(tableaus)


def micro(repeats):
    print("pivot kernel micro-benchmark (seconds per solve, best of "
          f"{repeats} repeats over 200 tableaus)")
    print(f"  {'rows x cols':>12} {'pure':>12} {'fast':>12} {'speedup':>9}")
    rng = np.random.default_rng(42)
    for m, n in ((6, 5), (10, 8), (20, 12), (40, 20)):
        tableaus = [make_tableau(rng, m, n) for _ in range(200)]
        t_pure = time_kernel(pure_pivot_loop, tableaus, repeats)
        if fast_pivot_loop is None:
            print(f"  {m:>5} x {n:<4} {t_pure:>12.2e} {'n/a':>12} {'n/a':>9}")
            continue
        t_fast = time_kernel(fast_pivot_loop, tableaus, repeats)
        print(
            f"  {m:>5} x {n:<4} {t_pure:>12.2e} {t_fast:>12.2e} "
            f"{t_pure / t_fast:>8.1f}x"
        )


def end_to_end():
    cmd = [
        sys.executable, "-m", "fuzzydea",
        "eval", "--model", "mo", "--data", "fixture:guo_tanaka",
        "--format", "csv",
    ]
    print("\nend-to-end: eval --model mo on the bundled 5-DMU fixture")
    outputs = {}
    for label, env in (("fast", {}), ("pure", {"FUZZYDEA_PURE": "1"})):
        t0 = time.perf_counter()
        proc = subprocess.run(
            cmd, capture_output=True, env=dict(os.environ, **env)
        )
        dt = time.perf_counter() - t0
        outputs[label] = proc.stdout
        print(f"  {label}: {dt:.2f}s (exit {proc.returncode})")
    same = outputs["fast"] == outputs["pure"]
    print(f"  outputs byte-identical: {same}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    if fast_pivot_loop is None:
        print("note: compiled kernel unavailable; micro-benchmark shows pure only")
    micro(args.repeats)
    end_to_end()


if __name__ == "__main__":
    main()
