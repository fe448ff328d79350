#!/usr/bin/env python3
"""Check the three gadget equivalences over every labeled graph up to a size.

    python scripts/reduction_equivalence.py --max-vertices 4 --kinds npi,pad
"""

import argparse
import sys
import time
from itertools import combinations

from equitree.coloring import UNBOUNDED, DegreeBound
from equitree.graph import Graph
from equitree.oracle import BudgetExceeded
from equitree.reductions import check_reduction


def labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=3)
    ap.add_argument("--kinds", default="npt,npi,pad")
    ap.add_argument("--qs", default="2,3")
    ap.add_argument("--t-list", default="1,inf")
    ap.add_argument("--budget", type=int, default=10**6)
    args = ap.parse_args()

    qs = [int(x) for x in args.qs.split(",")]
    ts = [DegreeBound.parse(x) for x in args.t_list.split(",")]
    status = 0
    for kind in args.kinds.split(","):
        kind_ts = [UNBOUNDED] if kind == "npi" else [t for t in ts if not (kind == "npt" and t.unbounded)]
        agree = disagree = skipped = 0
        start = time.perf_counter()
        for size in range(1, args.max_vertices + 1):
            for g in labeled_graphs(size):
                for q in qs:
                    for t in kind_ts:
                        try:
                            rep = check_reduction(g, kind, q, t, node_budget=args.budget)
                        except BudgetExceeded:
                            skipped += 1
                            continue
                        if rep.agree:
                            agree += 1
                        else:
                            disagree += 1
                            print(f"  DISAGREE {kind} q={q} t={t} edges={sorted(g.edges)}")
        status |= disagree > 0
        print(f"{kind}: {agree} agree, {disagree} disagree, {skipped} over budget "
              f"({time.perf_counter() - start:.1f}s)")
    return status


if __name__ == "__main__":
    sys.exit(main())
