#!/usr/bin/env python3
"""Sweep n and time the adjacency walk over L_n against the brute-force oracle.

The walk touches only the |L_n| members it emits; the oracle builds and
filters all 2**(n-2) compositions first. Around n = 18 the walk pulls ahead
for good.

Usage: python scripts/bench_sweep.py [--lo 10] [--hi 19] [--repeat 3] [--csv]
"""

import argparse
import csv
import sys
import time

from alphaseq.enumeration import enumerate_ln
from alphaseq.oracle import oracle_ln


def best_of(fn, repeat):
    best, result = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lo", type=int, default=10)
    parser.add_argument("--hi", type=int, default=19)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--csv", action="store_true", help="machine-readable output")
    args = parser.parse_args()

    rows = []
    for n in range(args.lo, args.hi + 1):
        walk_t, walk = best_of(lambda: list(enumerate_ln(n)), args.repeat)
        oracle_t, expected = best_of(lambda: oracle_ln(n), args.repeat)
        assert walk == expected, f"outputs disagree at n={n}"
        rows.append((n, len(walk), walk_t, oracle_t, oracle_t / walk_t))

    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "size", "walk_s", "oracle_s", "speedup"])
        for n, size, wt, ot, sp in rows:
            writer.writerow([n, size, f"{wt:.6f}", f"{ot:.6f}", f"{sp:.2f}"])
        return

    print(f"{'n':>3} {'|L_n|':>7} {'walk':>9} {'oracle':>9} {'speedup':>8}")
    for n, size, wt, ot, sp in rows:
        print(f"{n:>3} {size:>7} {wt:>8.3f}s {ot:>8.3f}s {sp:>7.1f}x")


if __name__ == "__main__":
    main()
