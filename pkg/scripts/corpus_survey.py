#!/usr/bin/env python3
"""Survey a seeded random corpus: freeness rate by size, exponent spectrum,
and SPOG levels of non-free deletions against the deletion-level formula."""

import argparse
from collections import Counter

from hypfree.arrangement import delete, restrict
from hypfree.freeness import FreenessCertificate, is_free
from hypfree.freepath import random_arrangement
from hypfree.spog import SpogCertificate, spog_check


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--nmin", type=int, default=4)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--bound", type=int, default=3)
    args = ap.parse_args()

    by_n = Counter()
    free_by_n = Counter()
    exponent_spectrum = Counter()
    level_hits = level_misses = 0

    span = max(args.nmax - args.nmin + 1, 1)
    for i in range(args.count):
        n = args.nmin + (i % span)
        arr = random_arrangement(args.seed * 1_000_003 + i, 3, n, args.bound)
        by_n[n] += 1
        cert = is_free(arr)
        if not isinstance(cert, FreenessCertificate):
            continue
        free_by_n[n] += 1
        exponent_spectrum[cert.exponents] += 1
        for j in range(len(arr)):
            smaller = delete(arr, j)
            if isinstance(is_free(smaller), FreenessCertificate):
                continue
            sc = spog_check(smaller)
            expected = len(arr) - 1 - len(restrict(arr, j))
            if isinstance(sc, SpogCertificate) and sc.level == expected \
                    and sc.poexp == cert.exponents:
                level_hits += 1
            else:
                level_misses += 1

    print(f"corpus: seed={args.seed} count={args.count} "
          f"n in [{args.nmin}, {args.nmax}] bound={args.bound}")
    print("\nfreeness rate by size:")
    for n in sorted(by_n):
        print(f"  n={n}: {free_by_n[n]}/{by_n[n]}")
    print("\nexponents of the free members:")
    for exps, cnt in sorted(exponent_spectrum.items()):
        print(f"  {exps}: {cnt}")
    print(f"\nnon-free deletions matching the level formula: "
          f"{level_hits} hits, {level_misses} misses")


if __name__ == "__main__":
    main()
