"""Wall-clock scaling of the interval sweep on random interval graphs.

    python3 scripts/bench_interval.py --sizes 50000 100000 200000 400000

Prints, per size, the cold time (first call, includes building the CSR
arrays of the graph) and the warm time (minimum over interleaved rounds),
followed by the ratio to the previous size. A linear algorithm shows
ratios near the size ratio.
"""
from __future__ import annotations

import argparse
import gc
import random
import time

from mcst.graph import Graph
from mcst.interval import random_interval_graph, solve_interval


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[50_000, 100_000, 200_000])
    ap.add_argument("--rounds", type=int, default=7)
    ap.add_argument("--mean-length", type=float, default=3.0)
    args = ap.parse_args(argv)

    instances = {}
    cold = {}
    for n in args.sizes:
        g, order = random_interval_graph(n, random.Random(n), mean_length=args.mean_length)
        g = Graph(g.n, g.adjacency)  # drop the cached CSR to time it once
        t0 = time.perf_counter()
        cover, _ = solve_interval(g, order)
        cold[n] = time.perf_counter() - t0
        instances[n] = (g, order, len(cover))

    warm = {n: float("inf") for n in args.sizes}
    for _ in range(args.rounds):
        for n, (g, order, _) in instances.items():
            gc.collect()
            t0 = time.perf_counter()
            solve_interval(g, order)
            warm[n] = min(warm[n], time.perf_counter() - t0)

    print(f"{'n':>9} {'m':>9} {'|S|':>7} {'cold s':>8} {'warm s':>8} {'ratio':>6}")
    prev = None
    for n in args.sizes:
        g, _, size = instances[n]
        ratio = f"{warm[n] / warm[prev]:.2f}" if prev else "-"
        print(f"{n:>9} {g.m:>9} {size:>7} {cold[n]:>8.3f} {warm[n]:>8.3f} {ratio:>6}")
        prev = n


if __name__ == "__main__":
    main()
