"""Hardness constructions as instance generators.

* SAT gadget graph: a simple planar monotone 3-bounded formula with ``n``
  variables becomes a bipartite graph of maximum degree 4 that has a
  spanning tree with a vertex cover of size ``3n - 1`` iff the formula is
  satisfiable.
* Unit-disk expansion: every edge ``uv`` of a grid-embedded graph becomes a
  chain of ``M(u, v)`` triangles (Manhattan length), and the optimum grows
  by exactly the total chain length.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .cnf import CnfInstance, validate_cnf
from .errors import AssignmentNotSatisfying, CoincidentEndpoints, NotCoverable, NotGeneratorReady
from .graph import Graph, has_covered_spanning_tree, is_connected, structural_checks


@dataclass(frozen=True)
class GadgetInstance:
    graph: Graph
    k: int
    roles: dict[int, str]  # vertex id -> role name such as "u3", "ubar3", "q1", "w2"

    def vertex(self, role: str) -> int:
        return self.graph.name_map[role]


def build_sat_instance(c: CnfInstance, check: bool = True) -> GadgetInstance:
    """Variable gadgets (4-cycle ``u r ubar t`` plus pendant ``s`` on ``t``),
    connector paths ``h q l`` with ``h ~ t_i`` and ``q`` tied to ``u_{i+1}``
    (when ``x_{i+1}`` has a single positive occurrence) or ``ubar_{i+1}``,
    and one vertex per clause adjacent to its literals' vertices.

    Vertex ids: variable blocks ``u, r, ubar, t, s`` first, then connector
    triples, then clause vertices.
    """
    diag = validate_cnf(c)
    if not diag.generator_ready:
        raise NotGeneratorReady("; ".join(diag.problems + diag.not_ready), diagnostics=diag)
    n, m = c.n_vars, len(c.clauses)
    names: list[str] = []
    for i in range(1, n + 1):
        names += [f"u{i}", f"r{i}", f"ubar{i}", f"t{i}", f"s{i}"]
    for i in range(1, n):
        names += [f"h{i}", f"q{i}", f"l{i}"]
    names += [f"w{j}" for j in range(1, m + 1)]
    ids = {name: idx for idx, name in enumerate(names)}

    edges = []
    for i in range(1, n + 1):
        u, r, ub, t, s = (ids[f"{p}{i}"] for p in ("u", "r", "ubar", "t", "s"))
        edges += [(u, r), (r, ub), (ub, t), (t, u), (t, s)]
    for i in range(1, n):
        h, q, l = ids[f"h{i}"], ids[f"q{i}"], ids[f"l{i}"]
        pos, _ = c.occurrences(i + 1)
        target = ids[f"u{i + 1}"] if pos == 1 else ids[f"ubar{i + 1}"]
        edges += [(h, q), (q, l), (h, ids[f"t{i}"]), (q, target)]
    for j, clause in enumerate(c.clauses, 1):
        for lit in clause:
            lit_vertex = ids[f"u{lit}"] if lit > 0 else ids[f"ubar{-lit}"]
            edges.append((lit_vertex, ids[f"w{j}"]))

    g = Graph.from_edges(len(names), edges, name_map=ids)
    gi = GadgetInstance(g, 3 * n - 1, {v: k for k, v in ids.items()})
    if check:
        rep = structural_checks(g)
        assert rep.bipartite and rep.max_degree <= 4 and rep.connected, rep
    return gi


def assignment_to_cover(c: CnfInstance, assignment: Sequence[bool], gi: GadgetInstance) -> frozenset[int]:
    """``{t_i, u_i}`` for true variables, ``{t_i, ubar_i}`` for false ones, and
    every connector middle ``q_i``; size ``3n - 1``."""
    if len(assignment) != c.n_vars:
        raise ValueError("assignment length must equal the number of variables")
    if not c.satisfied_by(assignment):
        raise AssignmentNotSatisfying("some clause vertex has no true literal")
    cover = set()
    for i, value in enumerate(assignment, 1):
        cover.add(gi.vertex(f"t{i}"))
        cover.add(gi.vertex(f"u{i}" if value else f"ubar{i}"))
    for i in range(1, c.n_vars):
        cover.add(gi.vertex(f"q{i}"))
    return frozenset(cover)


def manhattan(p: Sequence[int], q: Sequence[int]) -> int:
    return abs(p[0] - q[0]) + abs(p[1] - q[1])


@dataclass(frozen=True)
class ExpandedInstance:
    graph: Graph
    k_prime: int
    # original edge (u, v) with u < v -> triangles (l, s, r); l_1 ~ u, r_last ~ v
    chain_map: dict[tuple[int, int], tuple[tuple[int, int, int], ...]]


def expand_to_unit_disk(g: Graph, coords: dict[int, tuple[int, int]], k: int) -> ExpandedInstance:
    """Replace every edge by a chain of ``M(u, v)`` triangles and set
    ``k' = k + sum M``. Original vertices keep their ids."""
    if len(set(coords[v] for v in range(g.n))) != g.n:
        raise CoincidentEndpoints("grid coordinates must be pairwise distinct")
    next_id = g.n
    edges = []
    chain_map = {}
    total = 0
    for u, v in g.edges():
        alpha = manhattan(coords[u], coords[v])
        if alpha == 0:
            raise CoincidentEndpoints(f"edge ({u}, {v}) has Manhattan length 0")
        triples = []
        prev = u
        for _ in range(alpha):
            l, s, r = next_id, next_id + 1, next_id + 2
            next_id += 3
            edges += [(prev, l), (l, s), (s, r), (l, r)]
            triples.append((l, s, r))
            prev = r
        edges.append((prev, v))
        chain_map[(u, v)] = tuple(triples)
        total += alpha
    return ExpandedInstance(Graph.from_edges(next_id, edges), k + total, chain_map)


def lift_cover(g: Graph, expanded: ExpandedInstance, s: Iterable[int]) -> frozenset[int]:
    """Lift a feasible cover of ``g`` to the expansion, chain by chain:
    both endpoints in ``s`` -> add all ``r``; only ``u`` -> all ``r``;
    only ``v`` -> all ``l``; neither -> all ``r``."""
    s = frozenset(s)
    if g.n >= 1 and not (is_connected(g) and has_covered_spanning_tree(g, s)):
        raise NotCoverable("cover's boundary subgraph is not connected in the original graph")
    lifted = set(s)
    for (u, v), triples in expanded.chain_map.items():
        if v in s and u not in s:
            lifted.update(l for l, _, _ in triples)
        else:
            lifted.update(r for _, _, r in triples)
    return frozenset(lifted)
