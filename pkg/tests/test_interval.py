import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mcst.errors import DisconnectedGraph, NotAPermutation, NotIntervalOrdering
from mcst.graph import Graph, complete_graph, has_covered_spanning_tree, is_connected, path_graph, star_graph
from mcst.interval import SweepStep, random_interval_graph, solve_interval, verify_interval_ordering
from mcst.oracles import tau_star

# star_graph(3): centre 0, leaves 1, 2, 3
STAR = star_graph(3)


def brute_is_interval_ordering(g, order):
    n = len(order)
    return all(
        not g.has_edge(order[a], order[c]) or g.has_edge(order[b], order[c])
        for c in range(n) for b in range(c) for a in range(b)
    )


class TestVerify:
    def test_path(self):
        assert verify_interval_ordering(path_graph(5), [0, 1, 2, 3, 4]) == (True, None)

    def test_star_centre_last(self):
        assert verify_interval_ordering(STAR, [1, 2, 3, 0]) == (True, None)

    def test_star_centre_second(self):
        # positions 0-based: order[1] ~ order[3] but not order[2] ~ order[3]
        assert verify_interval_ordering(STAR, [1, 0, 2, 3]) == (False, (1, 2, 3))

    def test_not_a_permutation(self):
        with pytest.raises(NotAPermutation):
            verify_interval_ordering(path_graph(3), [0, 0, 1])
        with pytest.raises(NotAPermutation):
            verify_interval_ordering(path_graph(3), [0, 1])

    @given(st.integers(1, 7), st.data())
    def test_agrees_with_definition(self, n, data):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        edges = data.draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
        g = Graph.from_edges(n, edges)
        order = data.draw(st.permutations(range(n)))
        ok, triple = verify_interval_ordering(g, order)
        assert ok == brute_is_interval_ordering(g, order)
        if not ok:
            a, b, c = triple
            assert a < b < c
            assert g.has_edge(order[a], order[c]) and not g.has_edge(order[b], order[c])


class TestSolve:
    def test_p5_trace(self):
        cover, trace = solve_interval(path_graph(5), [0, 1, 2, 3, 4], check_invariants=True)
        assert cover == {1, 3}
        assert trace.steps == [SweepStep(t1=1, t2=0, t=0, s=1), SweepStep(t1=3, t2=2, t=2, s=3)]

    def test_k2(self):
        cover, _ = solve_interval(complete_graph(2), [0, 1])
        assert cover == {1}

    def test_star(self):
        cover, trace = solve_interval(STAR, [1, 2, 3, 0])
        assert cover == {0}
        assert [(st.t, st.s) for st in trace.steps] == [(0, 3)]

    def test_single_vertex(self):
        assert solve_interval(Graph.from_edges(1, []), [0])[0] == frozenset()

    def test_rejects_bad_ordering(self):
        with pytest.raises(NotIntervalOrdering) as info:
            solve_interval(STAR, [1, 0, 2, 3])
        assert info.value.details["triple"] == (1, 2, 3)

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            solve_interval(Graph.from_edges(3, [(0, 1)]), [0, 1, 2])

    @given(st.integers(1, 10), st.integers(1, 10), st.integers(0, 2**32))
    def test_side_by_side_blocks_are_disconnected(self, n1, n2, seed):
        rng = random.Random(seed)
        g1, o1 = random_interval_graph(n1, rng)
        g2, o2 = random_interval_graph(n2, rng)
        g = Graph.from_edges(n1 + n2, g1.edges() + [(u + n1, v + n1) for u, v in g2.edges()])
        order = o1 + [v + n1 for v in o2]
        assert verify_interval_ordering(g, order)[0]
        with pytest.raises(DisconnectedGraph):
            solve_interval(g, order)
        with pytest.raises(DisconnectedGraph):
            solve_interval(g, order, check_invariants=True)

    @given(st.integers(2, 12), st.integers(0, 2**32), st.booleans())
    def test_optimal_and_feasible(self, n, seed, integer):
        rng = random.Random(seed)
        g, order = random_interval_graph(n, rng, mean_length=rng.uniform(0.3, 4.0), integer=integer)
        cover, trace = solve_interval(g, order, check_invariants=True)
        assert has_covered_spanning_tree(g, cover)
        assert len(cover) == tau_star(g).value
        assert len(trace.steps) == len(cover)
        assert all(a.s < b.s for a, b in zip(trace.steps, trace.steps[1:]))


class TestGenerator:
    @given(st.integers(1, 40), st.integers(0, 2**32))
    def test_connected_with_valid_ordering(self, n, seed):
        g, order = random_interval_graph(n, random.Random(seed))
        assert sorted(order) == list(range(n))
        assert verify_interval_ordering(g, order)[0]
        assert is_connected(g)

    def test_deterministic(self):
        a = random_interval_graph(30, random.Random(5))
        b = random_interval_graph(30, random.Random(5))
        assert a == b
