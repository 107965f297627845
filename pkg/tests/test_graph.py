import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import connected_graphs, graph_and_subset
from mcst.errors import DisconnectedGraph, FormatError, InstanceTooLarge, NotCoverable
from mcst.graph import (
    Graph,
    boundary_components,
    boundary_subgraph,
    complete_graph,
    connected_components,
    cut_condition_holds,
    cycle_graph,
    diameter,
    diameter_with_witness,
    extract_covered_spanning_tree,
    find_induced_path,
    has_covered_spanning_tree,
    is_induced_path,
    is_p5_free,
    is_vertex_cover,
    path_graph,
    structural_checks,
)

C6 = cycle_graph(6)
P3 = path_graph(3)


def two_triangles_bridge():
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def complete_split_3_3():
    clique = [(0, 1), (0, 2), (1, 2)]
    return Graph.from_edges(6, clique + [(c, i) for c in range(3) for i in range(3, 6)])


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(FormatError):
            Graph.from_edges(2, [(1, 1)])

    def test_rejects_duplicate_and_out_of_range(self):
        with pytest.raises(FormatError):
            Graph.from_edges(2, [(0, 1), (1, 0)])
        with pytest.raises(FormatError):
            Graph.from_edges(2, [(0, 2)])

    def test_adjacency_sorted_and_symmetric(self):
        g = Graph.from_edges(4, [(3, 0), (2, 0), (1, 3)])
        assert g.adjacency == ((2, 3), (3,), (0,), (0, 1))
        assert g.m == 3
        assert g.edges() == [(0, 2), (0, 3), (1, 3)]


    def test_bulk_construction_matches(self):
        rng = random.Random(1)
        n = 3000
        edges = list({(min(u, v), max(u, v)) for u, v in
                      ((rng.randrange(n), rng.randrange(n)) for _ in range(6000)) if u != v})
        assert len(edges) >= 4096
        bulk = Graph.from_edges(n, edges)
        ref = [set() for _ in range(n)]
        for u, v in edges:
            ref[u].add(v)
            ref[v].add(u)
        assert bulk.adjacency == tuple(tuple(sorted(a)) for a in ref)
        indptr, indices = bulk.csr
        cold = Graph(n, bulk.adjacency).csr
        assert (indptr == cold[0]).all() and (indices == cold[1]).all()

    @pytest.mark.parametrize("bad, fragment", [((5, 5), "self-loop"), ((0, 9000), "out of range"), (None, "duplicate")])
    def test_bulk_construction_errors(self, bad, fragment):
        edges = [(i, i + 1) for i in range(5000)]
        edges.append(edges[7] if bad is None else bad)
        with pytest.raises(FormatError, match=fragment):
            Graph.from_edges(5001, edges)


class TestBoundarySubgraph:
    def test_p3_middle(self):
        assert boundary_subgraph(P3, {1}).edges() == [(0, 1), (1, 2)]

    def test_p3_empty(self):
        h = boundary_subgraph(P3, set())
        assert h.n == 3 and h.m == 0

    def test_c6_opposite_pair(self):
        h = boundary_subgraph(C6, {0, 3})
        assert set(h.edges()) == {(0, 5), (0, 1), (2, 3), (3, 4)}
        assert connected_components(h) == [[0, 1, 5], [2, 3, 4]]

    @given(connected_graphs(max_n=8))
    def test_full_and_empty(self, g):
        assert boundary_subgraph(g, range(g.n)) == g
        assert boundary_subgraph(g, ()).m == 0

    @given(graph_and_subset(max_n=8))
    def test_vertex_cover_keeps_everything(self, gs):
        g, s = gs
        if is_vertex_cover(g.edges(), s):
            assert boundary_subgraph(g, s) == g

    @given(graph_and_subset(max_n=9))
    def test_components_match_materialized(self, gs):
        g, s = gs
        assert boundary_components(g, s) == connected_components(boundary_subgraph(g, s))


class TestComponents:
    def test_k4(self):
        assert connected_components(complete_graph(4)) == [[0, 1, 2, 3]]

    def test_isolated(self):
        assert connected_components(Graph.from_edges(5, [])) == [[0], [1], [2], [3], [4]]

    def test_block_order_by_min_id(self):
        g = Graph.from_edges(5, [(4, 1), (0, 3)])
        assert connected_components(g) == [[0, 3], [1, 4], [2]]


class TestCoveredSpanningTree:
    def test_k4_single_vertex(self):
        assert has_covered_spanning_tree(complete_graph(4), {0})

    def test_c6_no_pair_suffices(self):
        assert not any(has_covered_spanning_tree(C6, s) for s in itertools.combinations(range(6), 2))

    def test_single_vertex_empty_set(self):
        assert has_covered_spanning_tree(Graph.from_edges(1, []), set())

    @given(graph_and_subset(max_n=8), st.data())
    def test_monotone(self, gs, data):
        g, s = gs
        extra = data.draw(st.frozensets(st.integers(0, g.n - 1)))
        if has_covered_spanning_tree(g, s):
            assert has_covered_spanning_tree(g, s | extra)


class TestExtraction:
    def test_k3_star(self):
        assert extract_covered_spanning_tree(complete_graph(3), {0}).edges == ((0, 1), (0, 2))

    def test_p4_is_itself(self):
        assert extract_covered_spanning_tree(path_graph(4), {1, 2}).edges == ((0, 1), (1, 2), (2, 3))

    def test_c6_alternate(self):
        t = extract_covered_spanning_tree(C6, {0, 2, 4})
        assert len(t.edges) == 5
        assert t.is_spanning_tree_of(C6)
        assert is_vertex_cover(t.edges, {0, 2, 4})

    def test_not_coverable(self):
        with pytest.raises(NotCoverable):
            extract_covered_spanning_tree(C6, {0, 3})

    @given(graph_and_subset(max_n=9))
    def test_output_always_valid(self, gs):
        g, s = gs
        if not has_covered_spanning_tree(g, s):
            return
        t = extract_covered_spanning_tree(g, s)
        assert len(t.edges) == g.n - 1
        assert t.is_spanning_tree_of(g)
        assert is_vertex_cover(t.edges, s)


class TestVertexCover:
    def test_p3(self):
        assert is_vertex_cover(P3.edges(), {1})

    def test_k3_empty(self):
        assert not is_vertex_cover(complete_graph(3).edges(), set())

    def test_k7_spanning_path_alternate(self):
        path = [(i, i + 1) for i in range(6)]
        assert all(complete_graph(7).has_edge(u, v) for u, v in path)
        assert is_vertex_cover(path, {1, 3, 5})


class TestCutCondition:
    def test_p2(self):
        assert cut_condition_holds(path_graph(2), {0})

    def test_c6_opposite_pair(self):
        assert not cut_condition_holds(C6, {0, 3})

    def test_bound(self):
        with pytest.raises(InstanceTooLarge):
            cut_condition_holds(path_graph(21), {0})
        assert cut_condition_holds(path_graph(21), range(0, 21, 2), bound=21)

    @given(graph_and_subset(min_n=2, max_n=10))
    def test_equivalent_to_boundary_connectivity(self, gs):
        g, s = gs
        assert cut_condition_holds(g, s) == has_covered_spanning_tree(g, s)


class TestDiameter:
    def test_values(self):
        assert diameter(complete_graph(5)) == 1
        assert diameter(cycle_graph(5)) == 2
        assert diameter(C6) == 3
        assert diameter(Graph.from_edges(1, [])) == 0

    def test_witness(self):
        d, w = diameter_with_witness(path_graph(4))
        assert d == 3 and w.kind == "diameter-pair" and set(w.vertices) == {0, 3}

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraph):
            diameter(Graph.from_edges(3, [(0, 1)]))


class TestP5:
    def test_p5_itself(self):
        ok, w = is_p5_free(path_graph(5))
        assert not ok
        assert w.kind == "induced-P5" and w.vertices in ((0, 1, 2, 3, 4), (4, 3, 2, 1, 0))

    def test_complete_split(self):
        assert is_p5_free(complete_split_3_3()) == (True, None)

    def test_two_triangles_bridge(self):
        assert is_p5_free(two_triangles_bridge()) == (True, None)

    def test_c6_has_induced_p5_but_no_p6(self):
        ok, w = is_p5_free(C6)
        assert not ok and is_induced_path(C6, w.vertices)
        assert find_induced_path(C6, 6) is None
        assert not any(is_induced_path(C6, t) for t in itertools.permutations(range(6)))

    @given(connected_graphs(max_n=9))
    def test_witness_is_induced_path(self, g):
        ok, w = is_p5_free(g)
        if not ok:
            assert len(set(w.vertices)) == 5 and is_induced_path(g, w.vertices)
        else:
            # exhaustive cross-check over all ordered 5-tuples
            assert not any(is_induced_path(g, t) for t in itertools.permutations(range(g.n), 5))


class TestStructural:
    def test_c6(self):
        r = structural_checks(C6)
        assert r.bipartite and r.max_degree == 2 and r.connected

    def test_k3(self):
        r = structural_checks(complete_graph(3))
        assert not r.bipartite
        assert r.odd_cycle.kind == "odd-cycle" and sorted(r.odd_cycle.vertices) == [0, 1, 2]

    @given(connected_graphs(max_n=9))
    def test_odd_cycle_witness(self, g):
        r = structural_checks(g)
        if r.bipartite:
            return
        cyc = r.odd_cycle.vertices
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
