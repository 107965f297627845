"""Exhaustive check of the SAT gadget on every small generator-ready CNF.

    python3 scripts/sat_gadget_census.py --max-vertices 18

For each formula whose gadget graph has at most ``--max-vertices`` vertices,
decides the MCST instance exactly and compares against satisfiability. Also
prints the structural profile (bipartite, maximum degree) of each gadget.
"""
from __future__ import annotations

import argparse
import sys
from collections import Counter

from mcst.cnf import enumerate_generator_ready, find_satisfying_assignment
from mcst.graph import structural_checks
from mcst.oracles import decide_mcst
from mcst.reductions import build_sat_instance


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=18)
    ap.add_argument("--max-vars", type=int, default=3)
    args = ap.parse_args(argv)

    tally = Counter()
    bad = []
    for n_vars in range(1, args.max_vars + 1):
        # 5n + 3(n - 1) vertices before any clause vertex
        room = args.max_vertices - (8 * n_vars - 3)
        if room < 1:
            break
        for cnf in enumerate_generator_ready(n_vars, room):
            gi = build_sat_instance(cnf)
            if gi.graph.n > args.max_vertices:
                continue
            sat = find_satisfying_assignment(cnf) is not None
            yes, _ = decide_mcst(gi.graph, gi.k)
            r = structural_checks(gi.graph)
            tally[(n_vars, sat)] += 1
            if yes != sat or not r.bipartite or r.max_degree > 4:
                bad.append(cnf)

    print(f"{'vars':>4} {'satisfiable':>11} {'formulas':>8}")
    for (n_vars, sat), count in sorted(tally.items()):
        print(f"{n_vars:>4} {str(sat).lower():>11} {count:>8}")
    print(f"disagreements: {len(bad)}")
    for cnf in bad[:5]:
        print(cnf, file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
