"""Dynamic program for MCST over a w-expression tree.

For a node ``t`` and a vertex set ``S`` of ``G_t``, each component of the
boundary subgraph is summarised by the pair ``(C, X)``: the labels on the
component and the labels on its ``S``-vertices (so ``X <= C``). A DP
function maps every pair to the number of components with that summary,
capped at 2. The table at ``t`` keeps, for every reachable function, the
minimum ``|S|`` producing it.

Label sets are bitmasks (label ``i`` is bit ``i - 1``). A function is stored
sparsely as a sorted tuple of ``((C, X), count)`` with nonzero counts.

Transitions are computed as forward images: every stored child function is
pushed through the node operation and results are min-merged, which yields
exactly the set of valid functions without enumerating all of them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from .errors import NoConnectedFunction, TableBlowup
from .expression import ExpressionTree, Introduce, Join, Relabel, Union

DEFAULT_TABLE_CAP = 1 << 20

PairKey = tuple[int, int]
DpFunction = tuple[tuple[PairKey, int], ...]


@dataclass(frozen=True)
class Entry:
    cost: int
    back: Any  # witness provenance: None | ("v", name) | ("u", left, right)


DpTable = dict[DpFunction, Entry]


def key_order(key: PairKey) -> tuple[int, int, int]:
    c, x = key
    return bin(c).count("1"), c, x


def all_keys(w: int) -> list[PairKey]:
    """Every pair ``(C, X)`` with ``X <= C <= [w]`` in canonical order."""
    keys = []
    for c in range(1 << w):
        x = c
        while True:
            keys.append((c, x))
            if x == 0:
                break
            x = (x - 1) & c
    return sorted(keys, key=key_order)


def canonical(counts: dict[PairKey, int]) -> DpFunction:
    return tuple(sorted(((k, v) for k, v in counts.items() if v), key=lambda kv: key_order(kv[0])))


def to_trits(f: DpFunction, w: int) -> str:
    """Dense encoding: one digit per key of :func:`all_keys`."""
    d = dict(f)
    return "".join(str(d.get(k, 0)) for k in all_keys(w))


def _bit(label: int) -> int:
    return 1 << (label - 1)


def _put(table: DpTable, f: DpFunction, entry: Entry, cap: int):
    old = table.get(f)
    if old is None:
        if len(table) >= cap:
            raise TableBlowup(f"more than {cap} stored functions", cap=cap)
        table[f] = entry
    elif entry.cost < old.cost:
        table[f] = entry


def dp_introduce(label: int, name: str = "") -> DpTable:
    b = _bit(label)
    return {
        (((b, b), 1),): Entry(1, ("v", name)),
        (((b, 0), 1),): Entry(0, None),
    }


def dp_union(left: DpTable, right: DpTable, cap: int = DEFAULT_TABLE_CAP) -> DpTable:
    out: DpTable = {}
    for fl, el in left.items():
        for fr, er in right.items():
            counts = dict(fl)
            for k, v in fr:
                counts[k] = min(2, counts.get(k, 0) + v)
            _put(out, canonical(counts), Entry(el.cost + er.cost, ("u", el.back, er.back)), cap)
    return out


def relabel_function(f: DpFunction, i: int, j: int) -> DpFunction:
    bi, bj = _bit(i), _bit(j)
    counts: dict[PairKey, int] = {}
    for (c, x), v in f:
        if c & bi:
            c = (c & ~bi) | bj
        if x & bi:
            x = (x & ~bi) | bj
        counts[(c, x)] = min(2, counts.get((c, x), 0) + v)
    return canonical(counts)


def dp_relabel(i: int, j: int, child: DpTable, cap: int = DEFAULT_TABLE_CAP) -> DpTable:
    out: DpTable = {}
    for f, e in child.items():
        _put(out, relabel_function(f, i, j), e, cap)
    return out


def join_function(f: DpFunction, i: int, j: int) -> DpFunction:
    """Merge component summaries through the auxiliary graph on (at most two)
    copies per key."""
    bi, bj = _bit(i), _bit(j)
    verts = [k for k, v in f for _ in range(v)]
    parent = list(range(len(verts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def links(u, v):
        (cu, xu), (cv, xv) = u, v
        return bool((xu & bi and cv & bj) or (xu & bj and cv & bi))

    for a in range(len(verts)):
        for b in range(a + 1, len(verts)):
            if links(verts[a], verts[b]) or links(verts[b], verts[a]):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    merged: dict[int, list[int]] = {}
    for a, (c, x) in enumerate(verts):
        r = find(a)
        acc = merged.setdefault(r, [0, 0])
        acc[0] |= c
        acc[1] |= x
    counts: dict[PairKey, int] = {}
    for c, x in merged.values():
        counts[(c, x)] = min(2, counts.get((c, x), 0) + 1)
    return canonical(counts)


def dp_join(i: int, j: int, child: DpTable, cap: int = DEFAULT_TABLE_CAP) -> DpTable:
    out: DpTable = {}
    for f, e in child.items():
        _put(out, join_function(f, i, j), e, cap)
    return out


def evaluate_all(tree: ExpressionTree, cap: int = DEFAULT_TABLE_CAP) -> dict[int, DpTable]:
    """Tables for every node under the root, keyed by node index."""
    tables: dict[int, DpTable] = {}
    for idx in _postorder(tree):
        node = tree.nodes[idx]
        if isinstance(node, Introduce):
            tables[idx] = dp_introduce(node.label, node.name)
        elif isinstance(node, Union):
            tables[idx] = dp_union(tables[node.left], tables[node.right], cap)
        elif isinstance(node, Relabel):
            tables[idx] = dp_relabel(node.src, node.dst, tables[node.child], cap)
        else:
            tables[idx] = dp_join(node.i, node.j, tables[node.child], cap)
    return tables


def evaluate(tree: ExpressionTree, cap: int = DEFAULT_TABLE_CAP) -> DpTable:
    tables: dict[int, DpTable] = {}
    for idx in _postorder(tree):
        node = tree.nodes[idx]
        if isinstance(node, Introduce):
            tables[idx] = dp_introduce(node.label, node.name)
        elif isinstance(node, Union):
            tables[idx] = dp_union(tables.pop(node.left), tables.pop(node.right), cap)
        elif isinstance(node, Relabel):
            tables[idx] = dp_relabel(node.src, node.dst, tables.pop(node.child), cap)
        else:
            tables[idx] = dp_join(node.i, node.j, tables.pop(node.child), cap)
    return tables[tree.root]


def _postorder(tree: ExpressionTree) -> list[int]:
    out = []
    stack = [(tree.root, False)]
    while stack:
        idx, done = stack.pop()
        if done:
            out.append(idx)
            continue
        stack.append((idx, True))
        node = tree.nodes[idx]
        if isinstance(node, Union):
            stack += [(node.right, False), (node.left, False)]
        elif isinstance(node, (Relabel, Join)):
            stack.append((node.child, False))
    return out


def witness_names(back) -> frozenset[str]:
    names = set()
    stack = [back]
    while stack:
        b = stack.pop()
        if b is None:
            continue
        if b[0] == "v":
            names.add(b[1])
        else:
            stack += [b[1], b[2]]
    return frozenset(names)


@dataclass(frozen=True)
class CliquewidthResult:
    value: int
    yes: Optional[bool]
    witness: frozenset[str]
    table_size: int


def root_extract(root: DpTable, k: Optional[int] = None) -> CliquewidthResult:
    """Best function describing a single boundary component."""
    best = None
    for f, e in root.items():
        if len(f) == 1 and f[0][1] == 1 and (best is None or e.cost < best.cost):
            best = e
    if best is None:
        raise NoConnectedFunction("no stored function has a single component")
    yes = None if k is None else best.cost <= k
    return CliquewidthResult(best.cost, yes, witness_names(best.back), len(root))


def solve_cliquewidth(tree: ExpressionTree, k: Optional[int] = None, cap: int = DEFAULT_TABLE_CAP) -> CliquewidthResult:
    return root_extract(evaluate(tree, cap), k)
