"""Exhaustive ground-truth solvers for tau* (minimum cover over spanning trees)
and gamma (domination number).

Subsets are enumerated by increasing cardinality, then lexicographically, so
witnesses are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import DisconnectedGraph, InstanceTooLarge
from .graph import Graph, is_connected

DEFAULT_ORACLE_BOUND = 24


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: frozenset[int]
    enumerated: int


def _check_size(g: Graph, bound: int):
    if g.n > bound:
        raise InstanceTooLarge(f"exhaustive search limited to n <= {bound}, got {g.n}")


def _closed_masks(g: Graph) -> list[int]:
    return [m | (1 << v) for v, m in enumerate(g.nbr_masks)]


def _dominates(closed: list[int], subset, full: int) -> bool:
    acc = 0
    for v in subset:
        acc |= closed[v]
    return acc == full


def _boundary_connected(masks, n: int, smask: int) -> bool:
    # BFS over the boundary subgraph: a vertex in S reaches all its neighbours,
    # any other vertex only its neighbours in S
    seen = 1
    frontier = 1
    full = (1 << n) - 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            v = low.bit_length() - 1
            f ^= low
            if smask >> v & 1:
                nxt |= masks[v]
            else:
                nxt |= masks[v] & smask
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def _mask(subset) -> int:
    m = 0
    for v in subset:
        m |= 1 << v
    return m


def gamma(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> OracleResult:
    """Minimum dominating set by exhaustive search."""
    _check_size(g, bound)
    if g.n == 0:
        return OracleResult(0, frozenset(), 1)
    closed = _closed_masks(g)
    full = (1 << g.n) - 1
    count = 0
    for k in range(1, g.n + 1):
        for subset in combinations(range(g.n), k):
            count += 1
            if _dominates(closed, subset, full):
                return OracleResult(k, frozenset(subset), count)
    raise AssertionError("V always dominates")


def minimum_dominating_sets(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> Iterator[frozenset[int]]:
    """All minimum dominating sets, in lexicographic order."""
    k = gamma(g, bound).value
    closed = _closed_masks(g)
    full = (1 << g.n) - 1
    for subset in combinations(range(g.n), k):
        if _dominates(closed, subset, full):
            yield frozenset(subset)


def tau_star(g: Graph, bound: int = DEFAULT_ORACLE_BOUND, start: Optional[int] = None) -> OracleResult:
    """Minimum ``|S|`` whose boundary subgraph is connected.

    ``start`` lets a caller skip cardinalities known to be infeasible
    (e.g. below gamma); it never changes the result as long as it is a
    valid lower bound.
    """
    _check_size(g, bound)
    if not is_connected(g):
        raise DisconnectedGraph("tau* is defined for connected graphs")
    if g.n <= 1:
        return OracleResult(0, frozenset(), 1)
    masks = g.nbr_masks
    closed = _closed_masks(g)
    full = (1 << g.n) - 1
    count = 0
    for k in range(max(1, start or 1), g.n + 1):
        for subset in combinations(range(g.n), k):
            count += 1
            # a vertex outside S with no neighbour in S is isolated in the
            # boundary subgraph, so S must dominate
            if not _dominates(closed, subset, full):
                continue
            if _boundary_connected(masks, g.n, _mask(subset)):
                return OracleResult(k, frozenset(subset), count)
    raise AssertionError("V always yields the whole graph")


def decide_mcst(g: Graph, k: int, bound: int = DEFAULT_ORACLE_BOUND) -> tuple[bool, Optional[frozenset[int]]]:
    if k < 0:
        raise ValueError("k must be non-negative")
    res = tau_star(g, bound)
    if res.value <= k:
        return True, res.witness
    return False, None
