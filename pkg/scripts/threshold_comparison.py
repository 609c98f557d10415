#!/usr/bin/env python3
"""Tabulate the degree threshold for stability of singular hypersurfaces
against the coarser multiplicity-times-dimension bound.

For each (delta, s): the exact algebraic threshold 1 + a + sqrt(a^2 - delta + 1)
with a = delta(s+2)/2, its float value, the integer bound delta*(s+3), and
whether the former is strictly smaller (it is, for every delta >= 2).

Usage: python scripts/threshold_comparison.py [max_delta] [max_s]
"""
from __future__ import annotations

import sys

from hypstab import compare_bounds


def main(max_delta: int = 6, max_s: int = 4) -> int:
    print(f"{'delta':>5} {'s':>2} {'exact threshold':<24} {'float':>8} {'coarse':>7} better")
    for delta in range(1, max_delta + 1):
        for s in range(0, max_s + 1):
            cb = compare_bounds(delta, s)
            print(
                f"{delta:>5} {s:>2} {str(cb.new_threshold):<24} "
                f"{float(cb.new_threshold):>8.4f} {cb.mordant_threshold:>7} "
                f"{cb.strictly_better}"
            )
    return 0


if __name__ == "__main__":
    args = [int(a) for a in sys.argv[1:3]]
    sys.exit(main(*args))
