"""Acceptance criteria, one test each. A PASS/FAIL line per criterion is
printed in the terminal summary (see conftest)."""
import gc
import itertools
import random
import time

import pytest

from conftest import Stopwatch
from mcst import expression as ex
from mcst.cliquewidth import solve_cliquewidth
from mcst.cnf import CnfInstance, enumerate_generator_ready, find_satisfying_assignment, random_generator_ready_cnf
from mcst.compare import SuiteReport, check_domination_instance, curated_expressions
from mcst.generators import random_connected_graph, random_diameter2_graph, random_p5_free_graph
from mcst.graph import (
    Graph,
    complete_graph,
    cut_condition_holds,
    cycle_graph,
    diameter,
    find_induced_p5,
    has_covered_spanning_tree,
    is_p5_free,
    path_graph,
    structural_checks,
)
from mcst.interval import random_interval_graph, solve_interval
from mcst.oracles import decide_mcst, gamma, tau_star
from mcst.reductions import assignment_to_cover, build_sat_instance, expand_to_unit_disk, lift_cover

criterion = pytest.mark.criterion


@criterion(1, "C6 ground truth")
def test_c6_ground_truth():
    c6 = cycle_graph(6)
    with Stopwatch() as sw:
        assert gamma(c6).value == 2
        assert tau_star(c6).value == 3
        assert diameter(c6) == 3
        ok, witness = is_p5_free(c6)
    assert sw.elapsed < 1.0
    # Stated target: is_p5_free(C6) is true. Five consecutive vertices of
    # C6 induce a P5, so a correct predicate must return false here.
    assert ok, f"C6 contains the induced P5 {witness.vertices}"


@criterion(2, "cut condition <=> connected boundary (500 graphs x 50 sets)")
def test_cut_condition_equivalence():
    rng = random.Random(2)
    mismatches = []
    with Stopwatch() as sw:
        for _ in range(500):
            g = random_connected_graph(rng.randint(2, 10), rng.uniform(0.0, 0.7), rng)
            for _ in range(50):
                s = {v for v in range(g.n) if rng.random() < rng.random()}
                if cut_condition_holds(g, s) != has_covered_spanning_tree(g, s):
                    mismatches.append((g.edges(), sorted(s)))
    assert not mismatches
    assert sw.elapsed < 60


@criterion(3, "interval sweep optimal on 200 graphs, invariants on")
def test_interval_optimality():
    rng = random.Random(3)
    mismatches = []
    with Stopwatch() as sw:
        for _ in range(200):
            n = rng.randint(2, 14)
            g, order = random_interval_graph(n, rng, mean_length=rng.uniform(0.3, 4.0), integer=rng.random() < 0.5)
            cover, _ = solve_interval(g, order, check_invariants=True)
            if not has_covered_spanning_tree(g, cover) or len(cover) != tau_star(g).value:
                mismatches.append((g.edges(), order))
    assert not mismatches
    assert sw.elapsed < 120


SIZES = (50_000, 100_000, 200_000)


def _best_times(instances, rounds=7):
    """Minimum wall time per size. Rounds visit every size in turn, so a burst
    of machine noise inflates one sample of each size rather than all samples
    of one size."""
    best = {n: float("inf") for n in instances}
    for _ in range(rounds):
        for n, (g, order) in instances.items():
            gc.collect()
            t0 = time.perf_counter()
            solve_interval(g, order)
            best[n] = min(best[n], time.perf_counter() - t0)
    return best


@criterion(4, "interval sweep linear time (50k/100k/200k)")
def test_interval_linear_time():
    times = _best_times({n: random_interval_graph(n, random.Random(n)) for n in SIZES})
    print({n: round(t, 3) for n, t in times.items()})
    assert times[200_000] < 2.0
    assert times[100_000] / times[50_000] <= 2.5
    assert times[200_000] / times[100_000] <= 2.5


@criterion(5, "clique-width DP equals tau* on the curated corpus")
def test_cliquewidth_corpus():
    corpus = curated_expressions()
    assert {"K2", "K3", "K5", "P4", "P5", "C5", "C6", "star3", "star7"} <= set(corpus)
    mismatches = []
    with Stopwatch() as sw:
        for name, text in corpus.items():
            tree = ex.parse_expression(text)
            g, _ = ex.realize_graph(tree)
            assert tree.w <= 3 and g.n <= 12, name
            if solve_cliquewidth(tree).value != tau_star(g).value:
                mismatches.append(name)
    assert not mismatches
    assert sw.elapsed < 120


@criterion(6, "gamma = tau* and repair on diameter-2 and P5-free graphs")
def test_domination_classes():
    rng = random.Random(6)
    rep = SuiteReport("acceptance-domset")
    for _ in range(100):
        g = random_diameter2_graph(rng.randint(2, 16), rng)
        assert diameter(g) <= 2
        check_domination_instance(g, rep, every_set_connected=True)
    for _ in range(100):
        g = random_p5_free_graph(rng.randint(2, 16), rng)
        assert find_induced_p5(g) is None
        check_domination_instance(g, rep, every_set_connected=False)
    assert rep.checked == 200
    assert rep.ok, rep.mismatches[:3]


SAMPLE_CNF = CnfInstance.of(4, [(1, 3, 4), (1, 2, 3), (-3, -4), (-1, -2, -4)])


@criterion(7, "SAT gadget soundness at desk scale")
def test_sat_soundness():
    contradiction = build_sat_instance(CnfInstance.of(1, [(1,), (-1,)]))
    assert decide_mcst(contradiction.graph, 2)[0] is False

    checked = 0
    for n_vars in (1, 2, 3):
        for c in enumerate_generator_ready(n_vars, 18 - (8 * n_vars - 3)):
            gi = build_sat_instance(c)
            if gi.graph.n > 18:
                continue
            sat = find_satisfying_assignment(c)
            yes, _ = decide_mcst(gi.graph, gi.k)
            assert yes == (sat is not None), c
            if sat is not None:
                cover = assignment_to_cover(c, sat, gi)
                assert len(cover) == gi.k and has_covered_spanning_tree(gi.graph, cover)
            checked += 1
    assert checked > 0

    gi = build_sat_instance(SAMPLE_CNF)
    cover = assignment_to_cover(SAMPLE_CNF, (True, False, False, False), gi)
    assert gi.graph.n == 33 and len(cover) == 11 and has_covered_spanning_tree(gi.graph, cover)


EXPANSIONS = {
    "K2": (complete_graph(2), {0: (0, 0), 1: (1, 0)}),
    "P3": (path_graph(3), {0: (0, 0), 1: (1, 0), 2: (2, 0)}),
    "K3": (complete_graph(3), {0: (0, 0), 1: (1, 0), 2: (0, 1)}),
    "C4": (cycle_graph(4), {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}),
}


@criterion(8, "unit-disk expansion adds exactly the total Manhattan length")
def test_expansion_exactness():
    for name, (g, coords) in EXPANSIONS.items():
        base = tau_star(g).value
        exp = expand_to_unit_disk(g, coords, base)
        assert exp.graph.n <= 20, name
        assert tau_star(exp.graph).value == exp.k_prime, name
        for k in range(g.n + 1):
            for s in itertools.combinations(range(g.n), k):
                if has_covered_spanning_tree(g, s):
                    assert has_covered_spanning_tree(exp.graph, lift_cover(g, exp, s)), (name, s)


@criterion(9, "every generated gadget graph is bipartite with max degree <= 4")
def test_gadget_structure():
    rng = random.Random(9)
    corpus = [SAMPLE_CNF]
    for n_vars in (1, 2, 3):
        corpus += list(enumerate_generator_ready(n_vars, 5))
    corpus += [random_generator_ready_cnf(rng.randint(1, 40), rng) for _ in range(300)]
    for c in corpus:
        r = structural_checks(build_sat_instance(c, check=False).graph)
        assert r.bipartite and r.max_degree <= 4 and r.connected, c
