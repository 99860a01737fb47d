#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-NumPy fallback.

Runs the full Alexander pipeline (evaluation + interpolation, two
primes) on representative braids with each backend and reports wall
times.  The numba backend is warmed up first so compilation time is
excluded from the numbers; pass --include-jit to see it.
"""

import argparse
import time

from twistknot import braid
from twistknot.alexander import alexander_from_braid
from twistknot.families import FamilyParams, construction_braid

CASES = [
    ("torus T(7,13)", lambda: braid.torus_braid(7, 13)),
    ("twisted T(11,6;8,-1)", lambda: braid.twisted_torus_braid(11, 6, 8, -1)),
    ("twisted T(20,11;15,-1)", lambda: braid.twisted_torus_braid(20, 11, 15, -1)),
    ("parallelized (1,2,2,2,3)", lambda: construction_braid(FamilyParams(1, 2, 2, 2, 3))),
]


def time_case(word, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        poly = alexander_from_braid(word, backend=backend)
        best = min(best, time.perf_counter() - start)
    return best, poly


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions per case; best time is reported")
    parser.add_argument("--include-jit", action="store_true",
                        help="also report the first numba call (compilation)")
    args = parser.parse_args()

    if args.include_jit:
        start = time.perf_counter()
        alexander_from_braid(braid.torus_braid(2, 3), backend="numba")
        print(f"numba first call (jit compile): {time.perf_counter() - start:.2f}s")
    else:
        alexander_from_braid(braid.torus_braid(2, 3), backend="numba")

    header = f"{'case':28s} {'strands':>7s} {'letters':>7s} {'numba':>9s} {'numpy':>9s} {'ratio':>6s}"
    print(header)
    print("-" * len(header))
    for name, build in CASES:
        word = build()
        t_nb, poly_nb = time_case(word, "numba", args.repeat)
        t_np, poly_np = time_case(word, "numpy", args.repeat)
        assert poly_nb == poly_np, f"backends disagree on {name}"
        print(f"{name:28s} {word.strands:7d} {len(word.letters):7d} "
              f"{t_nb * 1000:8.1f}ms {t_np * 1000:8.1f}ms {t_np / t_nb:5.1f}x")
    print("\nresults identical across backends for every case")


if __name__ == "__main__":
    main()
