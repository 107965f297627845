"""Run every randomized oracle comparison suite and print a summary table.

    python3 scripts/run_oracle_compare.py --count 200 --max-n 12 --seed 0

Exits 1 if any suite reports a mismatch; the first few mismatches are
printed as JSON so they can be replayed.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from mcst.compare import SUITES


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--suite", choices=sorted(SUITES), action="append")
    args = ap.parse_args(argv)

    failed = False
    print(f"{'suite':<12} {'checked':>8} {'mismatches':>11} {'seconds':>8}")
    for name in args.suite or sorted(SUITES):
        t0 = time.perf_counter()
        rep = SUITES[name](args.count, args.max_n, args.seed)
        dt = time.perf_counter() - t0
        print(f"{name:<12} {rep.checked:>8} {len(rep.mismatches):>11} {dt:>8.2f}")
        if rep.stats:
            print(f"{'':<12} stats: {json.dumps(rep.stats, sort_keys=True)}")
        if not rep.ok:
            failed = True
            for m in rep.mismatches[:3]:
                print(json.dumps(m), file=sys.stderr)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
