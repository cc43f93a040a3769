#!/usr/bin/env python3
"""Run the degree-threshold scan and write its CSV next to a JSON summary.

Example:
    python scripts/run_threshold_scan.py --n 8,9 --grid 0/1,1/2,1/1 \
        --trials 20 --seed 2024 --out scan.csv
"""

import argparse
import json
import sys

from tightcycles.experiments import scan_rows_to_csv, scan_threshold
from tightcycles.oracle import SearchBudget
from tightcycles.serialize import jsonable, rational_from_str


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--d", type=int, default=1)
    parser.add_argument("--n", default="8,9", help="comma-separated vertex counts")
    parser.add_argument("--grid", default="0/1,1/2,1/1", help="comma-separated 'p/q' degrees")
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--budget-nodes", type=int, default=10**8)
    parser.add_argument("--budget-secs", type=float, default=60.0)
    parser.add_argument("--out", default="scan.csv")
    args = parser.parse_args()

    grid = [rational_from_str(s) for s in args.grid.split(",")]
    n_list = [int(s) for s in args.n.split(",")]
    budget = SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_secs)
    rows, summary = scan_threshold(args.k, args.d, n_list, grid, args.trials, args.seed, budget)
    with open(args.out, "w") as fh:
        fh.write(scan_rows_to_csv(rows))
    json.dump(jsonable(summary), sys.stdout, indent=2)
    print()
    print(f"wrote {len(rows)} rows to {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
