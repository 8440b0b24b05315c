#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the two hot kernels at full corpus scale (300k+ letters):

  els-scan   pattern scan across a band of skips, both signs
  ngram      dense 4-gram counting at strides 1..5
  minimal    minimal-skip search for an absent pattern (worst case)

Usage: python3 benchmarks/bench_backends.py [--length N] [--max-skip K]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from toracrypt import LetterStream, Pattern, SkipRange, find_minimal
from toracrypt import kernels


def time_call(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(length: int, max_skip: int) -> None:
    rng = np.random.default_rng(12345)
    symbols = rng.integers(0, 22, length, dtype=np.uint8)
    stream = LetterStream(symbols, "bench")
    # A pattern the stream actually contains at skip 7...
    present = np.array([symbols[1000 + k * 7] for k in range(4)], dtype=np.uint8)
    # ...and one it (almost surely) contains nowhere at small skips.
    absent = Pattern([21, 21, 21, 21, 21, 21, 21])

    tasks = {
        "els-scan": lambda: [
            kernels.els_scan(symbols, present, skip)
            for step in range(2, max_skip + 1)
            for skip in (step, -step)
        ],
        "ngram": lambda: [kernels.ngram_counts(symbols, 4, skip, 22) for skip in range(1, 6)],
        "minimal": lambda: find_minimal(stream, absent, SkipRange(2, max_skip)),
    }

    print(f"stream length {length}, skips 2..{max_skip}")
    print(f"{'task':<10} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for name, fn in tasks.items():
        times = {}
        for backend in kernels.available_backends():
            with kernels.use_backend(backend):
                fn()  # warm-up: JIT compile / cache load outside the timing
                times[backend] = time_call(fn)
        if "numba" in times:
            ratio = times["numpy"] / times["numba"]
            print(f"{name:<10} {times['numpy']:>9.3f}s {times['numba']:>9.3f}s {ratio:>8.1f}x")
        else:
            print(f"{name:<10} {times['numpy']:>9.3f}s {'n/a':>10} {'n/a':>9}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--length", type=int, default=304_807)
    parser.add_argument("--max-skip", type=int, default=500)
    args = parser.parse_args()
    bench(args.length, args.max_skip)


if __name__ == "__main__":
    main()
