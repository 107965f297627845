"""MCST through minimum dominating sets on diameter-<=2 and P5-free graphs.

On these classes tau* equals gamma. For diameter <= 2 the boundary subgraph
of every minimum dominating set is already connected; for connected
P5-free graphs a swap-based repair turns any minimum dominating set into
one with a connected boundary subgraph.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import ClassPreconditionFailed, DisconnectedGraph, RepairStuck, TheoremViolated
from .graph import Graph, as_vertex_set, boundary_components, diameter_with_witness, find_induced_p5, is_connected


@dataclass(frozen=True)
class RepairStep:
    s1: int
    s2: int
    r1: int
    r2: int
    components_before: int
    components_after: int


@dataclass
class RepairTrace:
    steps: list[RepairStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    return all(v in s or any(u in s for u in g.adjacency[v]) for v in range(g.n))


def repair_boundary(g: Graph, s: Iterable[int]) -> tuple[frozenset[int], RepairTrace]:
    """Swap ``{s1, s2}`` for ``{r1, r2}`` until the boundary subgraph is connected.

    Each step takes the component ``H1`` with the lowest vertex, the
    lexicographically smallest edge ``r1 r2`` of ``g`` between non-``S``
    vertices of ``H1`` and of another component ``H2``, and the lowest-id
    ``S``-neighbours ``s1`` of ``r1`` in ``H1`` and ``s2`` of ``r2`` in ``H2``.
    On a connected P5-free graph with ``s`` a minimum dominating set, every
    step keeps ``s`` a minimum dominating set and removes a component.
    """
    s = set(as_vertex_set(g, s))
    trace = RepairTrace()
    comps = boundary_components(g, s)
    while len(comps) > 1:
        comp_of = {}
        for idx, block in enumerate(comps):
            for v in block:
                comp_of[v] = idx
        h1 = comps[0]
        edge = None
        for r1 in h1:
            if r1 in s:
                continue
            for r2 in g.adjacency[r1]:
                if r2 not in s and comp_of[r2] != 0:
                    edge = (r1, r2)
                    break
            if edge:
                break
        if edge is None:
            raise RepairStuck(
                "no edge between non-S vertices of distinct boundary components",
                components=len(comps),
            )
        r1, r2 = edge
        h2 = comp_of[r2]
        s1 = next((x for x in g.adjacency[r1] if x in s and comp_of[x] == 0), None)
        s2 = next((x for x in g.adjacency[r2] if x in s and comp_of[x] == h2), None)
        if s1 is None or s2 is None:
            raise RepairStuck("non-S vertex without an S-neighbour in its component")
        s -= {s1, s2}
        s |= {r1, r2}
        after = boundary_components(g, s)
        trace.steps.append(RepairStep(s1, s2, r1, r2, len(comps), len(after)))
        if len(after) >= len(comps):
            raise RepairStuck("swap did not reduce the number of boundary components", step=trace.steps[-1])
        comps = after
    return frozenset(s), trace


def solve_via_domination(g: Graph, domset: Iterable[int]) -> tuple[int, frozenset[int]]:
    """Turn a minimum dominating set into an optimal MCST cover.

    ``domset`` must be a minimum dominating set; only domination is checked
    here, minimality is the caller's responsibility.
    """
    domset = as_vertex_set(g, domset)
    if not is_connected(g):
        raise DisconnectedGraph("graph must be connected")
    if not is_dominating_set(g, domset):
        raise ValueError("domset does not dominate the graph")
    diam, pair = diameter_with_witness(g)
    if diam <= 2:
        if len(boundary_components(g, domset)) > 1:
            raise TheoremViolated("minimum dominating set of a diameter-2 graph with disconnected boundary")
        return len(domset), domset
    p5 = find_induced_p5(g)
    if p5 is not None:
        raise ClassPreconditionFailed(
            f"diameter {diam} and induced P5 {p5.vertices}", diameter=pair, p5=p5
        )
    cover, _ = repair_boundary(g, domset)
    return len(cover), cover
