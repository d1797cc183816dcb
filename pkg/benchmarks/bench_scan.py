#!/usr/bin/env python3
"""Benchmark the compiled subset-scan kernels against the pure-Python twin.

Run after an editable install:

    python3 benchmarks/bench_scan.py [--quick]

Workloads are the hot paths of the code toolkit: the purge pass over a
moderately large random constant-weight code, a full cover-free scan, a
list-decoding scan, and the covered-column sweep.
"""
from __future__ import annotations

import argparse
import time

from coverfree import _slowscan, random_constant_weight
from coverfree.scan import HAVE_FASTSCAN

if HAVE_FASTSCAN:
    from coverfree import _fastscan


def bench(label: str, fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()

    n_rows, t, q = (40, 80, 0.26) if args.quick else (40, 150, 0.26)
    code = random_constant_weight(n_rows, t, q, seed=0)
    masks = list(code.masks)
    # A certified code forces the scans to run to completion (no early exit).
    clean = masks[:]
    for j in sorted(_slowscan.cf_purge(clean, 2, 1), reverse=True):
        del clean[j]
    clean = clean[:30]

    workloads = [
        (f"cf_purge     (t={t}, s=2, l=1)", masks, lambda m: (lambda mod: mod.cf_purge(m, 2, 1))),
        (f"cf_find_bad  (t={len(clean)}, s=2, l=1)", clean, lambda m: (lambda mod: mod.cf_find_bad(m, 2, 1))),
        (f"ld_find_bad  (t={len(clean)}, s=3, L=2)", clean, lambda m: (lambda mod: mod.ld_find_bad(m, 3, 2))),
        (f"covered_cols (t={len(clean)}, pick=3)", clean, lambda m: (lambda mod: mod.covered_columns(m, 3))),
    ]
    repeats = 3

    print(f"{'workload':<34} {'pure [s]':>10} {'compiled [s]':>13} {'speedup':>9}")
    for label, m, make in workloads:
        call = make(m)
        t_pure = bench(label, lambda: call(_slowscan), repeats)
        if HAVE_FASTSCAN:
            t_fast = bench(label, lambda: call(_fastscan), repeats)
            print(f"{label:<34} {t_pure:>10.4f} {t_fast:>13.4f} {t_pure / t_fast:>8.1f}x")
        else:
            print(f"{label:<34} {t_pure:>10.4f} {'(not built)':>13} {'-':>9}")


if __name__ == "__main__":
    main()
