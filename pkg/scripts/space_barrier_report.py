#!/usr/bin/env python3
"""Tabulate the space-barrier construction's minimum relative degree.

For each n the exact closed form is printed together with the limit value
and (for small n) the Hamilton-search outcome on the generated graph.

Example:
    python scripts/space_barrier_report.py --k 3 --d 1 --n 9,12,30,300
"""

import argparse
import sys

from tightcycles.constructions import (
    construction_limit,
    gen_space_barrier,
    space_barrier_min_degree,
)
from tightcycles.oracle import SearchBudget, find_tight_hamilton

ORACLE_MAX_N = 13


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--d", type=int, default=1)
    parser.add_argument("--n", default="9,12,30,300", help="comma-separated vertex counts")
    parser.add_argument("--budget-secs", type=float, default=60.0)
    args = parser.parse_args()

    limit = construction_limit(args.k, args.d)
    print(f"k={args.k} d={args.d}  limit = {limit} ~ {float(limit):.6f}")
    print(f"{'n':>6}  {'min rel degree':>16}  {'float':>9}  {'gap to limit':>13}  oracle")
    for n in (int(s) for s in args.n.split(",")):
        deg = space_barrier_min_degree(n, args.k, args.d)
        gap = abs(deg - limit)
        outcome = "-"
        if n <= ORACLE_MAX_N:
            h = gen_space_barrier(n, args.k, args.d)
            outcome = find_tight_hamilton(h, SearchBudget(max_seconds=args.budget_secs)).outcome
        print(f"{n:>6}  {str(deg):>16}  {float(deg):>9.6f}  {str(gap):>13}  {outcome}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
