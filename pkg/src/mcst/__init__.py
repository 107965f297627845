"""Minimum cover spanning tree toolkit: exact oracles, class-specific solvers,
a clique-width dynamic program, and reduction-based instance generators."""
from .graph import (
    Graph,
    SpanningTree,
    boundary_subgraph,
    connected_components,
    cut_condition_holds,
    diameter,
    extract_covered_spanning_tree,
    has_covered_spanning_tree,
    is_p5_free,
    is_vertex_cover,
    structural_checks,
)
from .oracles import decide_mcst, gamma, tau_star
from .domination import repair_boundary, solve_via_domination
from .interval import solve_interval, verify_interval_ordering
from .expression import parse_expression, realize_graph
from .cliquewidth import solve_cliquewidth
from .reductions import build_sat_instance, expand_to_unit_disk, lift_cover

__all__ = [
    "Graph", "SpanningTree", "boundary_subgraph", "connected_components", "cut_condition_holds",
    "diameter", "extract_covered_spanning_tree", "has_covered_spanning_tree", "is_p5_free",
    "is_vertex_cover", "structural_checks", "decide_mcst", "gamma", "tau_star", "repair_boundary",
    "solve_via_domination", "solve_interval", "verify_interval_ordering", "parse_expression",
    "realize_graph", "solve_cliquewidth", "build_sat_instance", "expand_to_unit_disk", "lift_cover",
]
