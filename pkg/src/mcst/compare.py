"""Module-vs-brute-force equivalence batteries behind ``mcst oracle-compare``."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import expression as ex
from .cliquewidth import solve_cliquewidth
from .cnf import enumerate_generator_ready, find_satisfying_assignment, random_generator_ready_cnf
from .domination import is_dominating_set, repair_boundary
from .generators import random_connected_graph, random_diameter2_graph, random_grid_embedding, random_p5_free_graph
from .graph import boundary_components, has_covered_spanning_tree, is_connected, structural_checks
from .interval import random_interval_graph, solve_interval
from .io import serialize_coords, serialize_graph, serialize_ordering
from .oracles import decide_mcst, gamma, minimum_dominating_sets, tau_star
from .reductions import assignment_to_cover, build_sat_instance, expand_to_unit_disk, lift_cover


@dataclass
class SuiteReport:
    suite: str
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def bump(self, key, by=1):
        self.stats[key] = self.stats.get(key, 0) + by

    def to_dict(self) -> dict:
        return {"suite": self.suite, "checked": self.checked, "ok": self.ok,
                "mismatches": self.mismatches, "stats": self.stats}


def interval_suite(count: int, max_n: int, seed: int) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("interval")
    for _ in range(count):
        n = rng.randint(2, max_n)
        g, order = random_interval_graph(n, rng, mean_length=rng.uniform(0.5, 4.0), integer=rng.random() < 0.5)
        try:
            cover, _ = solve_interval(g, order, check_invariants=True)
            truth = tau_star(g).value
            ok = len(cover) == truth and has_covered_spanning_tree(g, cover)
        except Exception as exc:  # recorded as a mismatch with the instance
            ok, cover, truth = False, frozenset(), repr(exc)
        rep.checked += 1
        if not ok:
            rep.mismatches.append({"graph": serialize_graph(g), "order": serialize_ordering(order),
                                   "cover": sorted(cover), "tau_star": truth})
    return rep


def curated_expressions() -> dict[str, str]:
    rng = random.Random(0)
    corpus = {
        "K2": ex.complete_expr(2),
        "K3": ex.complete_expr(3),
        "K5": ex.complete_expr(5),
        "P4": ex.path_expr(4),
        "P5": ex.path_expr(5),
        "C5": ex.C5_EXPR,
        "C6": ex.C6_EXPR,
        "star3": ex.star_expr(3),
        "star7": ex.star_expr(7),
        "P8": ex.path_expr(8),
    }
    found = 0
    while found < 6:
        n = rng.randint(4, 12)
        expr = ex.random_cograph_expr(n, rng)
        if is_connected(ex.realize_graph(ex.parse_expression(expr))[0]):
            corpus[f"cograph{found}_n{n}"] = expr
            found += 1
    return corpus


def random_connected_expressions(count: int, max_n: int, rng: random.Random, w_max: int = 3):
    out = []
    while len(out) < count:
        n = rng.randint(1, max_n)
        w = rng.randint(1, w_max)
        expr = ex.random_expr(n, w, rng)
        if is_connected(ex.realize_graph(ex.parse_expression(expr))[0]):
            out.append(expr)
    return out


def cliquewidth_suite(count: int, max_n: int, seed: int) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("cliquewidth")
    exprs = list(curated_expressions().values()) + random_connected_expressions(count, min(max_n, 9), rng)
    for expr in exprs:
        tree = ex.parse_expression(expr)
        g, _ = ex.realize_graph(tree)
        res = solve_cliquewidth(tree)
        truth = tau_star(g).value
        cover = {g.name_map[name] for name in res.witness}
        rep.checked += 1
        if res.value != truth or len(cover) != res.value or not has_covered_spanning_tree(g, cover):
            rep.mismatches.append({"expr": expr, "dp": res.value, "tau_star": truth, "witness": sorted(res.witness)})
    return rep


def check_domination_instance(g, rep: SuiteReport, *, every_set_connected: bool) -> None:
    """gamma = tau*, and repair works on every minimum dominating set."""
    gm = gamma(g)
    ts = tau_star(g, start=gm.value)
    problems = []
    if gm.value != ts.value:
        problems.append(f"gamma={gm.value} tau*={ts.value}")
    for d in minimum_dominating_sets(g):
        rep.bump("dominating_sets")
        before = len(boundary_components(g, d))
        if every_set_connected and before > 1:
            problems.append(f"diameter-2 min dominating set {sorted(d)} has {before} components")
        try:
            s, trace = repair_boundary(g, d)
        except Exception as exc:
            problems.append(f"repair failed on {sorted(d)}: {exc!r}")
            continue
        rep.bump("repair_steps", len(trace))
        if len(s) != len(d) or not has_covered_spanning_tree(g, s) or not is_dominating_set(g, s):
            problems.append(f"repair output {sorted(s)} invalid")
        if any(st.components_after >= st.components_before for st in trace.steps):
            problems.append("component count did not strictly decrease")
        if len(trace) >= max(before, 1):
            problems.append(f"{len(trace)} steps for {before} components")
    rep.checked += 1
    if problems:
        rep.mismatches.append({"graph": serialize_graph(g), "problems": problems})


def domset_suite(count: int, max_n: int, seed: int) -> SuiteReport:
    rng = random.Random(seed)
    rep = SuiteReport("domset")
    for _ in range(count):
        check_domination_instance(random_diameter2_graph(rng.randint(2, max_n), rng), rep, every_set_connected=True)
    for _ in range(count):
        g = random_p5_free_graph(rng.randint(2, max_n), rng)
        check_domination_instance(g, rep, every_set_connected=False)
    return rep


def reductions_suite(count: int, max_n: int, seed: int) -> SuiteReport:
    """SAT gadget soundness up to ``max_n`` gadget vertices, only-if direction
    on random larger formulas, and expansion exactness within ``max_n``."""
    rng = random.Random(seed)
    rep = SuiteReport("reductions")

    def mismatch(**kw):
        rep.mismatches.append(kw)

    for n_vars in (1, 2, 3):
        max_m = max_n - (8 * n_vars - 3)
        if max_m < 1:
            continue
        for c in enumerate_generator_ready(n_vars, max_m):
            gi = build_sat_instance(c)
            rep.checked += 1
            st = structural_checks(gi.graph)
            if not (st.bipartite and st.max_degree <= 4):
                mismatch(kind="structure", cnf=c.clauses)
            sat = find_satisfying_assignment(c)
            yes, _ = decide_mcst(gi.graph, gi.k)
            if yes != (sat is not None):
                mismatch(kind="sat-soundness", cnf=c.clauses, satisfiable=sat is not None, mcst=yes)
            if sat is not None and not has_covered_spanning_tree(gi.graph, assignment_to_cover(c, sat, gi)):
                mismatch(kind="assignment-cover", cnf=c.clauses)
            rep.bump("sat_formulas")
    for _ in range(count):
        c = random_generator_ready_cnf(rng.randint(1, 8), rng)
        sat = find_satisfying_assignment(c)
        gi = build_sat_instance(c)
        rep.checked += 1
        if sat is not None:
            cover = assignment_to_cover(c, sat, gi)
            if len(cover) != gi.k or not has_covered_spanning_tree(gi.graph, cover):
                mismatch(kind="assignment-cover", cnf=c.clauses)
    done = 0
    while done < count:
        g = random_connected_graph(rng.randint(2, 4), rng.uniform(0, 0.6), rng)
        coords = random_grid_embedding(g, rng, span=3)
        base = tau_star(g)
        exp = expand_to_unit_disk(g, coords, base.value)
        if exp.graph.n > max_n:
            continue
        done += 1
        rep.checked += 1
        truth = tau_star(exp.graph, start=gamma(exp.graph).value).value
        lifted = lift_cover(g, exp, base.witness)
        if truth != exp.k_prime or not has_covered_spanning_tree(exp.graph, lifted) or len(lifted) != exp.k_prime:
            mismatch(kind="expansion", graph=serialize_graph(g), coords=serialize_coords(coords),
                     expected=exp.k_prime, tau_star=truth)
        rep.bump("expansions")
    return rep


SUITES: dict[str, Callable[[int, int, int], SuiteReport]] = {
    "interval": interval_suite,
    "cliquewidth": cliquewidth_suite,
    "domset": domset_suite,
    "reductions": reductions_suite,
}
