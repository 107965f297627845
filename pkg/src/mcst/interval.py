"""Linear-time MCST on interval graphs given an interval ordering.

Positions are 0-based throughout: ``order[p]`` is the vertex at position
``p``. An ordering is an interval ordering when for all ``a < b < c``,
``order[a] ~ order[c]`` implies ``order[b] ~ order[c]``.
"""
from __future__ import annotations

import random
from array import array
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import DisconnectedGraph, NotAPermutation, NotIntervalOrdering, SweepInvariantViolated
from .graph import Graph


class SweepStep(NamedTuple):
    t1: int
    t2: int
    t: int
    s: int


@dataclass
class SweepTrace:
    steps: list[SweepStep] = field(default_factory=list)


def _position_arrays(g: Graph, order: Sequence[int]):
    """Vertex positions and the neighbour lists as flat position arrays (CSR
    indexed by vertex id)."""
    n = g.n
    if len(order) != n:
        raise NotAPermutation(f"ordering has {len(order)} entries, graph has {n} vertices")
    order_arr = np.asarray(order, dtype=np.int64).reshape(n)
    if n and (order_arr.min() < 0 or order_arr.max() >= n or np.bincount(order_arr, minlength=n).max() != 1):
        raise NotAPermutation(f"ordering is not a permutation of 0..{n - 1}")
    pos = np.empty(n, dtype=np.int64)
    pos[order_arr] = np.arange(n, dtype=np.int64)
    indptr, indices = g.csr
    return order_arr, pos, np.diff(indptr), indptr, pos[indices]


def _scan(n, pos, deg, indptr, nb, validate: bool):
    """Furthest position in each closed neighbourhood (indexed by position)
    and, optionally, the first interval-ordering violation."""
    reach = np.empty(n, dtype=np.int64)
    reach[pos] = pos
    has = deg > 0
    if not has.any():
        return reach, None
    starts = indptr[:-1][has]
    owner = pos[has]
    reach[owner] = np.maximum(owner, np.maximum.reduceat(nb, starts))
    if not validate:
        return reach, None
    own = np.repeat(pos, deg)
    back = nb < own
    cnt = np.add.reduceat(back.astype(np.int64), starts)
    lo = np.minimum.reduceat(np.where(back, nb, n), starts)
    bad = (cnt > 0) & (lo != owner - cnt)
    if not bad.any():
        return reach, None
    c = int(owner[bad].min())
    v = int(np.flatnonzero(pos == c)[0])
    backs = {int(p) for p in nb[indptr[v]:indptr[v + 1]] if p < c}
    a = min(backs)
    b = next(p for p in range(a + 1, c) if p not in backs)
    return reach, (a, b, c)


def verify_interval_ordering(g: Graph, order: Sequence[int]) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """O(n + m) check that every back-neighbourhood is a contiguous block ending
    just before its vertex. On failure returns positions ``(a, b, c)`` with
    ``order[a] ~ order[c]`` but not ``order[b] ~ order[c]``."""
    _, pos, deg, indptr, nb = _position_arrays(g, order)
    _, triple = _scan(g.n, pos, deg, indptr, nb, True)
    return triple is None, triple


def solve_interval(
    g: Graph,
    order: Sequence[int],
    *,
    validate: bool = True,
    check_invariants: bool = False,
) -> tuple[frozenset[int], SweepTrace]:
    """Greedy sweep producing a minimum cover among spanning trees.

    Each round takes ``t1`` (first position outside the covered region
    ``V_T``), ``t2`` (last position inside it), ``t = min(t1, t2)``, and adds
    the vertex ``s`` at the largest position in ``N[order[t]]``; ``V_T`` then
    absorbs ``N[order[s]]``.

    Once position ``s`` is chosen every position up to ``s`` is covered, and
    a later position ``q`` is covered exactly when its first neighbour
    ``low[q]`` is at most ``s``. So the next ``t1`` is the first ``q`` with
    ``low[q] > s``, which a prefix maximum of ``low`` answers for every ``s``
    at once. The loop does constant work per round and everything else is a
    linear array pass.

    ``check_invariants`` also maintains ``V_T`` explicitly and asserts the
    per-round ordering facts (quadratic; for tests only).
    """
    n = g.n
    order_arr, pos_arr, deg, indptr_arr, nb_arr = _position_arrays(g, order)
    trace = SweepTrace()
    if n <= 1:
        return frozenset(), trace
    reach_arr, triple = _scan(n, pos_arr, deg, indptr_arr, nb_arr, validate)
    if triple is not None:
        raise NotIntervalOrdering(f"violating positions {triple}", triple=triple)

    # components of an interval ordering are blocks of consecutive positions
    gaps = np.flatnonzero(np.maximum.accumulate(reach_arr)[:-1] <= np.arange(n - 1))
    if gaps.size:
        q = int(gaps[0])
        raise DisconnectedGraph(f"no edge between positions 0..{q} and {q + 1}..{n - 1}")

    low = _low(n, pos_arr, deg, indptr_arr, nb_arr)
    # next_t1[s] = first position q with low[q] > s (n when none)
    next_t1 = np.searchsorted(np.maximum.accumulate(low), np.arange(n), side="right")

    order = _compact(order_arr)
    reach = _compact(reach_arr)
    next_t1 = _compact(next_t1)
    covered = None
    if check_invariants:
        covered = bytearray(n)
        covered[0] = 1
    t1 = 1
    t2 = 0
    chosen = []
    steps = trace.steps
    prev_s = -1
    while t1 < n:
        t = t1 if t1 < t2 else t2
        s = reach[t]
        if s <= prev_s:
            raise DisconnectedGraph(f"sweep stalled at position {t}")
        if covered is not None:
            _check_round(covered, t1, t2, t, s, prev_s, reach, order, g)
        steps.append(SweepStep(t1, t2, t, s))
        chosen.append(order[s])
        if reach[s] > t2:
            t2 = reach[s]
        t1 = next_t1[s]
        if covered is not None:
            _mark_round(covered, s, t1, order, pos_arr, g)
        prev_s = s
    return frozenset(chosen), trace


def _low(n, pos, deg, indptr, nb):
    """Smallest position in each closed neighbourhood (indexed by position)."""
    low = np.empty(n, dtype=np.int64)
    low[pos] = pos
    has = deg > 0
    if has.any():
        owner = pos[has]
        low[owner] = np.minimum(owner, np.minimum.reduceat(nb, indptr[:-1][has]))
    return low


def _compact(a: np.ndarray) -> array:
    out = array("q")
    out.frombytes(np.ascontiguousarray(a, dtype=np.int64).tobytes())
    return out


def _mark_round(covered, s, t1, order, pos, g):
    covered[s] = 1
    for u in g.adjacency[order[s]]:
        covered[int(pos[u])] = 1
    if not all(covered[: s + 1]):
        raise SweepInvariantViolated(f"prefix up to s={s} not covered")
    first_open = covered.find(0)
    if (first_open if first_open >= 0 else len(covered)) != t1:
        raise SweepInvariantViolated(f"t1={t1} disagrees with the covered region")


def _check_round(covered, t1, t2, t, s, prev_s, reach, order, g):
    # covered is V_T of the previous round here
    if not all(covered[:t1]):
        raise SweepInvariantViolated(f"prefix before t1={t1} not covered")
    if any(covered[t2 + 1:]):
        raise SweepInvariantViolated(f"covered region extends past t2={t2}")
    if not prev_s < t < s:
        raise SweepInvariantViolated(f"expected {prev_s} < t={t} < s={s}")
    if not (t <= t1 <= s and t <= t2 <= s):
        raise SweepInvariantViolated(f"t={t}, t1={t1}, t2={t2}, s={s} out of order")
    vs = order[s]
    for q in (t1, t2):
        if q != s and not g.has_edge(order[q], vs):
            raise SweepInvariantViolated(f"position {q} not adjacent to s={s}")


def random_interval_graph(
    n: int,
    rng: random.Random,
    *,
    mean_length: float = 3.0,
    integer: bool = False,
) -> tuple[Graph, list[int]]:
    """Random connected interval graph and an interval ordering for it.

    Left endpoints are a random walk; each interval is stretched to reach
    the next left endpoint so the graph is connected. Vertex ids are
    shuffled so the ordering is not the identity. The ordering sorts by
    right endpoint, which always satisfies the interval-ordering property.
    """
    if n <= 0:
        return Graph(0, ()), []
    lefts = []
    x = 0.0
    for _ in range(n):
        x += rng.randint(0, 2) if integer else rng.expovariate(1.0)
        lefts.append(x)
    rights = []
    for i, left in enumerate(lefts):
        length = rng.randint(0, int(2 * mean_length)) if integer else rng.uniform(0, 2 * mean_length)
        r = left + length
        if i + 1 < n and r < lefts[i + 1]:
            r = lefts[i + 1]
        rights.append(r)
    # edges by sweeping left endpoints (already sorted)
    ids = list(range(n))
    rng.shuffle(ids)
    edges = []
    for i in range(n):
        ri = rights[i]
        j = i + 1
        while j < n and lefts[j] <= ri:
            edges.append((ids[i], ids[j]))
            j += 1
    g = Graph.from_edges(n, edges)
    by_right = sorted(range(n), key=lambda i: (rights[i], lefts[i]))
    return g, [ids[i] for i in by_right]
