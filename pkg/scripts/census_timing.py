#!/usr/bin/env python3
"""Time every census case in the acceptance matrix and report order,
involution count, and wall-clock seconds per case.

Usage: python3 scripts/census_timing.py [--jobs N]
"""
import argparse
import sys
import time

from degsums import GroupSpec, run_census
from degsums.acceptance import CENSUS_MATRIX


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--jobs", type=int, default=None)
    args = parser.parse_args()
    total = 0.0
    print(f"{'family':<10} {'n':>2} {'p':>3} {'order':>16} {'involutions':>12} {'seconds':>8}")
    for family, cases in CENSUS_MATRIX:
        for n, p in cases:
            t0 = time.perf_counter()
            report = run_census(GroupSpec(family, n, p), jobs=args.jobs)
            dt = time.perf_counter() - t0
            total += dt
            print(f"{family:<10} {n:>2} {p:>3} {report.order:>16} "
                  f"{report.involution_total:>12} {dt:>8.2f}")
    print(f"total {total:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
