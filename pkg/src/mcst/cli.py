"""Command-line front end: ``solve``, ``generate``, ``verify``, ``oracle-compare``.

Exit codes: 0 ok, 1 verification failure or mismatch, 2 usage / malformed
input, 3 instance too large for an exhaustive step.
"""
from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import io
from .cliquewidth import DEFAULT_TABLE_CAP, solve_cliquewidth
from .cnf import find_satisfying_assignment, parse_dimacs
from .compare import SUITES
from .domination import solve_via_domination
from .errors import FormatError, McstError, NoApplicableAlgorithm
from .expression import parse_expression, realize_graph
from .graph import (
    Graph,
    SpanningTree,
    diameter,
    extract_covered_spanning_tree,
    find_induced_p5,
    has_covered_spanning_tree,
    is_connected,
    is_vertex_cover,
)
from .interval import random_interval_graph, solve_interval
from .oracles import DEFAULT_ORACLE_BOUND, gamma, tau_star
from .reductions import build_sat_instance, expand_to_unit_disk

P5_CHECK_BOUND = 60
ALGORITHMS = ("brute", "interval", "cliquewidth", "domset", "auto")


@dataclass
class RunReport:
    algorithm: str
    value: int
    cover: frozenset[int]
    tree: SpanningTree
    timings: dict[str, float] = field(default_factory=dict)
    verified: Optional[bool] = None
    k: Optional[int] = None
    names: Optional[dict[int, str]] = None  # id -> expression leaf name

    @property
    def decision(self) -> Optional[str]:
        if self.k is None:
            return None
        return "yes" if self.value <= self.k else "no"

    def to_dict(self) -> dict:
        d = {
            "algorithm": self.algorithm,
            "value": self.value,
            "cover": [v + 1 for v in sorted(self.cover)],
            "tree": [[u + 1, v + 1] for u, v in self.tree.edges],
            "timings": {k: round(v, 6) for k, v in self.timings.items()},
            "verified": self.verified,
            "k": self.k,
            "decision": self.decision,
        }
        if self.names is not None:
            d["cover_names"] = [self.names[v] for v in sorted(self.cover)]
        return d


def to_text(d: dict) -> str:
    """Line-oriented rendering of a flat-ish dict; nested values become JSON."""
    lines = []
    for key, value in d.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, separators=(",", ":"))
        elif value is None:
            value = "-"
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(d: dict, as_json: bool):
    sys.stdout.write(json.dumps(d, indent=2) + "\n" if as_json else to_text(d))


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


class _Timer:
    def __init__(self):
        self.timings = {}

    def __call__(self, phase, fn, *args, **kwargs):
        t0 = time.perf_counter()
        out = fn(*args, **kwargs)
        self.timings[phase] = self.timings.get(phase, 0.0) + time.perf_counter() - t0
        return out


# ---- solve -----------------------------------------------------------------

_LEAF = re.compile(r"v?(\d+)$")


def _expression_graph(args, g: Optional[Graph], timer: _Timer):
    tree = timer("parse", parse_expression, _read(args.expr))
    realized, _ = realize_graph(tree)
    if g is None:
        return realized, tree, {i: name for name, i in realized.name_map.items()}, None
    # leaf names are read as 1-based graph ids, like every other input file
    mapping = {}
    for name, i in realized.name_map.items():
        m = _LEAF.match(name)
        if not m or not 1 <= int(m.group(1)) <= g.n:
            raise FormatError(f"expression leaf {name!r} does not name a vertex 1..{g.n}")
        mapping[name] = int(m.group(1)) - 1
    if len(mapping) != g.n:
        raise FormatError(f"expression has {len(mapping)} leaves, graph has {g.n} vertices")
    leaf = {i: mapping[name] for name, i in realized.name_map.items()}
    relabelled = Graph.from_edges(g.n, [(leaf[u], leaf[v]) for u, v in realized.edges()])
    if relabelled != g:
        raise FormatError("expression does not generate the given graph")
    return g, tree, None, mapping


def _pick_auto(args, g: Graph) -> str:
    if args.order:
        return "interval"
    if args.expr:
        return "cliquewidth"
    if is_connected(g):
        diam_ok = diameter(g) <= 2
        p5_ok = not diam_ok and g.n <= P5_CHECK_BOUND and find_induced_p5(g) is None
        if (diam_ok or p5_ok) and (args.domset or g.n <= args.bound):
            return "domset"
    if g.n <= args.bound:
        return "brute"
    raise NoApplicableAlgorithm(
        f"n={g.n}: no ordering or expression given, and no exhaustive step fits the bound {args.bound}")


def solve_command(args) -> RunReport:
    timer = _Timer()
    g = timer("parse", io.parse_graph, _read(args.graph)) if args.graph else None
    if g is None and not args.expr:
        raise FormatError("--graph is required unless --expr is given")
    algorithm = args.algorithm
    if algorithm == "auto":
        algorithm = "cliquewidth" if g is None else _pick_auto(args, g)

    names = None
    if algorithm == "interval":
        if not args.order:
            raise FormatError("interval needs --order")
        order = timer("parse", io.parse_ordering, _read(args.order), g.n)
        cover, _ = timer("solve", solve_interval, g, order)
    elif algorithm == "cliquewidth":
        if not args.expr:
            raise FormatError("cliquewidth needs --expr")
        g, tree, names, mapping = _expression_graph(args, g, timer)
        res = timer("solve", solve_cliquewidth, tree, None, args.table_cap)
        lookup = g.name_map if mapping is None else mapping
        cover = frozenset(lookup[name] for name in res.witness)
    elif algorithm == "domset":
        if args.domset:
            dom = timer("parse", io.parse_vertex_set, _read(args.domset), g.n)
        else:
            dom = timer("gamma", gamma, g, args.bound).witness
        _, cover = timer("solve", solve_via_domination, g, dom)
    elif algorithm == "brute":
        cover = timer("solve", tau_star, g, args.bound).witness
    else:
        raise NoApplicableAlgorithm(f"unknown algorithm {algorithm!r}")

    tree = timer("extract", extract_covered_spanning_tree, g, cover)
    report = RunReport(algorithm, len(cover), cover, tree, timer.timings, None, args.k, names)
    if args.verify:
        report.verified = timer("verify", verify_solution, g, cover, tree)
    return report


def verify_solution(g: Graph, cover, tree: Optional[SpanningTree] = None) -> bool:
    if g.n >= 1 and not is_connected(g):
        return False
    if not has_covered_spanning_tree(g, cover):
        return False
    if tree is not None:
        return tree.is_spanning_tree_of(g) and is_vertex_cover(tree.edges, cover)
    return True


# ---- generate ----------------------------------------------------------------

def _truth(g: Graph, k: Optional[int], bound: int) -> dict:
    if g.n > bound or not is_connected(g):
        return {"tau_star": "unknown", "decision": "unknown"}
    value = tau_star(g, bound, start=gamma(g, bound).value if g.n > 1 else None).value
    out = {"tau_star": value, "decision": "unknown"}
    if k is not None:
        out["decision"] = "yes" if value <= k else "no"
    return out


def _write(prefix: str, suffix: str, text: str) -> str:
    path = f"{prefix}.{suffix}"
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    Path(path).write_text(text)
    return path


def generate_command(args) -> dict:
    files = {}
    if args.kind == "sat":
        c = parse_dimacs(_read(args.cnf))
        gi = build_sat_instance(c)
        g, k = gi.graph, gi.k
        sidecar = {"generator": "sat", "k": k, "n": g.n, "m": g.m,
                   "satisfiable": find_satisfying_assignment(c) is not None if c.n_vars <= 20 else "unknown",
                   "roles": {str(v + 1): role for v, role in sorted(gi.roles.items())}}
    elif args.kind == "unitdisk":
        base = io.parse_graph(_read(args.graph))
        coords = io.parse_coords(_read(args.coords), base.n)
        exp = expand_to_unit_disk(base, coords, args.k)
        g, k = exp.graph, exp.k_prime
        sidecar = {"generator": "unitdisk", "k": k, "n": g.n, "m": g.m,
                   "chains": {f"{u + 1}-{v + 1}": len(t) for (u, v), t in exp.chain_map.items()}}
    else:
        g, order = random_interval_graph(args.n, random.Random(args.seed))
        k = None
        files["order"] = _write(args.out, "order", io.serialize_ordering(order))
        sidecar = {"generator": "interval-random", "n": g.n, "m": g.m, "seed": args.seed, "k": None}
    sidecar.update(_truth(g, k, args.bound))
    files["graph"] = _write(args.out, "graph", io.serialize_graph(g))
    files["truth"] = _write(args.out, "truth.json", json.dumps(sidecar, indent=2) + "\n")
    return {"files": files, **{key: sidecar[key] for key in ("generator", "n", "m", "k", "tau_star", "decision")}}


# ---- verify ------------------------------------------------------------------

def verify_command(args) -> dict:
    g = io.parse_graph(_read(args.graph))
    cover = io.parse_vertex_set(_read(args.cover), g.n)
    tree = SpanningTree(tuple(io.parse_tree(_read(args.tree), g.n))) if args.tree else None
    out = {"connected": is_connected(g) if g.n else True,
           "cover_size": len(cover),
           "boundary_connected": has_covered_spanning_tree(g, cover)}
    if tree is not None:
        out["tree_spanning"] = tree.is_spanning_tree_of(g)
        out["tree_covered"] = is_vertex_cover(tree.edges, cover)
    out["ok"] = all(v for key, v in out.items() if key != "cover_size")
    return out


# ---- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mcst", description="Minimum cover spanning tree toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="compute a minimum cover and a spanning tree it covers")
    s.add_argument("--graph")
    s.add_argument("--k", type=int)
    s.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    s.add_argument("--order")
    s.add_argument("--expr")
    s.add_argument("--domset")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--json", action="store_true")
    s.add_argument("--bound", type=int, default=DEFAULT_ORACLE_BOUND, help="largest n for exhaustive steps")
    s.add_argument("--table-cap", type=int, default=DEFAULT_TABLE_CAP)

    gen = sub.add_parser("generate", help="write instance files and a ground-truth sidecar")
    gsub = gen.add_subparsers(dest="kind", required=True)
    g1 = gsub.add_parser("sat")
    g1.add_argument("--cnf", required=True)
    g2 = gsub.add_parser("unitdisk")
    g2.add_argument("--graph", required=True)
    g2.add_argument("--coords", required=True)
    g2.add_argument("--k", type=int, required=True)
    g3 = gsub.add_parser("interval-random")
    g3.add_argument("--n", type=int, required=True)
    g3.add_argument("--seed", type=int, default=0)
    for g in (g1, g2, g3):
        g.add_argument("--out", default="instance", help="output path prefix")
        g.add_argument("--bound", type=int, default=DEFAULT_ORACLE_BOUND)
        g.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="check a cover (and optionally a tree) against a graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--cover", required=True)
    v.add_argument("--tree")
    v.add_argument("--json", action="store_true")

    c = sub.add_parser("oracle-compare", help="run a module-vs-brute-force battery")
    c.add_argument("--suite", choices=sorted(SUITES), required=True)
    c.add_argument("--count", type=int, default=100)
    c.add_argument("--max-n", type=int, default=14)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--json", action="store_true")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            report = solve_command(args)
            _emit(report.to_dict(), args.json)
            return 1 if report.verified is False else 0
        if args.command == "generate":
            _emit(generate_command(args), args.json)
            return 0
        if args.command == "verify":
            out = verify_command(args)
            _emit(out, args.json)
            return 0 if out["ok"] else 1
        rep = SUITES[args.suite](args.count, args.max_n, args.seed)
        _emit(rep.to_dict(), args.json)
        return 0 if rep.ok else 1
    except McstError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
