"""Random instance families used by tests and the comparison batteries."""
from __future__ import annotations

import random

from .expression import random_cograph_expr, realize_graph, parse_expression
from .graph import Graph, diameter, find_induced_p5, is_connected


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    edges = set()
    perm = list(range(n))
    rng.shuffle(perm)
    for i in range(1, n):
        u, v = perm[i], perm[rng.randrange(i)]
        edges.add((min(u, v), max(u, v)))
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_diameter2_graph(n: int, rng: random.Random, max_tries: int = 10_000) -> Graph:
    for _ in range(max_tries):
        g = random_connected_graph(n, rng.uniform(0.3, 0.8), rng)
        if diameter(g) <= 2:
            return g
    raise RuntimeError("no diameter-2 sample found")


def _perturb(g: Graph, flips: int, rng: random.Random) -> Graph:
    edges = set(g.edges())
    for _ in range(flips):
        u, v = rng.sample(range(g.n), 2)
        e = (min(u, v), max(u, v))
        edges ^= {e}
    return Graph.from_edges(g.n, sorted(edges))


def _split_graph(n: int, rng: random.Random) -> Graph:
    k = rng.randint(1, max(1, n - 1))
    edges = {(u, v) for u in range(k) for v in range(u + 1, k)}
    for v in range(k, n):
        for u in rng.sample(range(k), rng.randint(1, k)):
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def _clique_chain(n: int, rng: random.Random) -> Graph:
    # cliques joined by single bridges: P5-free only for short chains
    sizes = []
    left = n
    while left > 0:
        s = min(left, rng.randint(1, 5))
        sizes.append(s)
        left -= s
    edges = set()
    start = 0
    prev = None
    for s in sizes:
        block = range(start, start + s)
        edges |= {(u, v) for u in block for v in block if u < v}
        if prev is not None:
            edges.add((rng.choice(prev), rng.choice(list(block))))
        prev = list(block)
        start += s
    return Graph.from_edges(n, sorted(edges))


def random_p5_free_graph(n: int, rng: random.Random, max_tries: int = 100_000) -> Graph:
    """Rejection-sampled connected P5-free graph on ``n`` vertices.

    Proposals mix sparse and dense random graphs, split graphs, lightly
    perturbed cographs, and short chains of cliques; only the P5-free,
    connected ones are kept.
    """
    for _ in range(max_tries):
        kind = rng.random()
        if kind < 0.2:
            g = random_connected_graph(n, rng.uniform(0.0, 0.9), rng)
        elif kind < 0.4:
            g = _split_graph(n, rng)
        elif kind < 0.75:
            cg, _ = realize_graph(parse_expression(random_cograph_expr(n, rng)))
            g = _perturb(cg, rng.randint(0, 3), rng)
        else:
            g = _clique_chain(n, rng)
        g = Graph.from_edges(n, g.edges())
        if is_connected(g) and find_induced_p5(g) is None:
            return g
    raise RuntimeError("no P5-free sample found")


def random_grid_embedding(g: Graph, rng: random.Random, span: int = 3) -> dict[int, tuple[int, int]]:
    cells = [(x, y) for x in range(span) for y in range(span)]
    if len(cells) < g.n:
        raise ValueError("grid too small")
    chosen = rng.sample(cells, g.n)
    return dict(enumerate(chosen))

