#!/usr/bin/env python3
"""Time the three counting engines across a grid and emit CSV.

Each cell counts solutions of x_1 + ... + x_k == 0 (mod n**s) with every
unknown restricted to the coprime class (t_i = 1).  Timing columns are
medians over --reps runs; a cell is left empty when the engine's budget
rules the instance out (brute force dies first, then convolution).

On every grid tried so far the closed form wins by growing margins as
n**s and k grow; that ordering is an observation, not an assertion, so
this script reports and never fails.

Usage:
    python scripts/engine_benchmark.py
    python scripts/engine_benchmark.py --n 4,8,16,32 --s 1,2 --k 2,4,8,16 --reps 5 --out grid.csv
"""

import argparse
import os
import statistics
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "src"))

from rescong import (
    BudgetExceededError,
    CongruenceInstance,
    brute_force_count,
    convolution_count,
    count_restricted,
)


def median_ms(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        try:
            fn()
        except BudgetExceededError:
            return None
        times.append((time.perf_counter() - t0) * 1000.0)
    return statistics.median(times)


def int_list(text):
    return [int(tok) for tok in text.split(",") if tok]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", default="4,8,16,32")
    parser.add_argument("--s", default="1,2")
    parser.add_argument("--k", default="2,4,8,16")
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--out", help="CSV path (default stdout)")
    args = parser.parse_args()

    sink = open(args.out, "w") if args.out else sys.stdout
    print("n,s,k,count,formula_ms,convolution_ms,brute_ms", file=sink)
    for n in int_list(args.n):
        for s in int_list(args.s):
            for k in int_list(args.k):
                inst = CongruenceInstance(n=n, s=s, b=0, restrictions=(1,) * k)
                count = count_restricted(inst)
                cells = [
                    median_ms(lambda: count_restricted(inst), args.reps),
                    median_ms(lambda: convolution_count(inst), args.reps),
                    median_ms(lambda: brute_force_count(inst), args.reps),
                ]
                rendered = ",".join("" if c is None else f"{c:.3f}" for c in cells)
                print(f"{n},{s},{k},{count},{rendered}", file=sink)
    if args.out:
        sink.close()
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
