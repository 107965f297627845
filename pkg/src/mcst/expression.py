"""w-expression trees: s-expression parsing, realisation, and builders for
common graph families.

Text format::

    (intro <label> <name>)
    (union <t> <t>)
    (relabel <i> <j> <t>)
    (join <i> <j> <t>)

Labels are positive integers, names are identifiers, whitespace is free.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Union as TypingUnion

from .errors import ExpressionError
from .graph import Graph


@dataclass(frozen=True)
class Introduce:
    label: int
    name: str


@dataclass(frozen=True)
class Union:
    left: int
    right: int


@dataclass(frozen=True)
class Relabel:
    src: int
    dst: int
    child: int


@dataclass(frozen=True)
class Join:
    i: int
    j: int
    child: int


Node = TypingUnion[Introduce, Union, Relabel, Join]


@dataclass(frozen=True)
class ExpressionTree:
    """Nodes stored in post-order (children precede parents); ``root`` is an index."""

    nodes: tuple[Node, ...]
    root: int

    @property
    def w(self) -> int:
        labels = [0]
        for node in self.nodes:
            if isinstance(node, Introduce):
                labels.append(node.label)
            elif isinstance(node, Relabel):
                labels += [node.src, node.dst]
            elif isinstance(node, Join):
                labels += [node.i, node.j]
        return max(labels)

    def names(self) -> list[str]:
        return [n.name for n in self.nodes if isinstance(n, Introduce)]

    def subtree(self, idx: int) -> "ExpressionTree":
        keep = sorted(_descendants(self.nodes, idx))
        remap = {old: new for new, old in enumerate(keep)}
        nodes = []
        for old in keep:
            node = self.nodes[old]
            if isinstance(node, Union):
                node = Union(remap[node.left], remap[node.right])
            elif isinstance(node, Relabel):
                node = Relabel(node.src, node.dst, remap[node.child])
            elif isinstance(node, Join):
                node = Join(node.i, node.j, remap[node.child])
            nodes.append(node)
        return ExpressionTree(tuple(nodes), remap[idx])

    def to_sexpr(self) -> str:
        text: dict[int, str] = {}
        for idx in sorted(_descendants(self.nodes, self.root)):
            node = self.nodes[idx]
            if isinstance(node, Introduce):
                text[idx] = f"(intro {node.label} {node.name})"
            elif isinstance(node, Union):
                text[idx] = f"(union {text.pop(node.left)} {text.pop(node.right)})"
            elif isinstance(node, Relabel):
                text[idx] = f"(relabel {node.src} {node.dst} {text.pop(node.child)})"
            else:
                text[idx] = f"(join {node.i} {node.j} {text.pop(node.child)})"
        return text[self.root]


def _descendants(nodes, idx) -> set[int]:
    out = set()
    stack = [idx]
    while stack:
        k = stack.pop()
        out.add(k)
        node = nodes[k]
        if isinstance(node, Union):
            stack += [node.left, node.right]
        elif isinstance(node, (Relabel, Join)):
            stack.append(node.child)
    return out


_TOKEN = re.compile(r"\(|\)|[^\s()]+")
_NAME = re.compile(r"[A-Za-z0-9_][A-Za-z0-9_.\-]*$")
_ARITY = {"intro": (2, 0), "union": (0, 2), "relabel": (2, 1), "join": (2, 1)}


def _tokens(text: str):
    for m in _TOKEN.finditer(text):
        yield m.start(), m.group()


def parse_expression(text: str) -> ExpressionTree:
    """Parse and validate an s-expression w-expression tree."""
    nodes: list[Node] = []
    # each frame: [op, op_position, atoms, children]
    stack: list[list] = []
    root = None
    expect_op = False
    for pos, tok in _tokens(text):
        if root is not None:
            raise ExpressionError(f"trailing input at position {pos}", position=pos)
        if tok == "(":
            if expect_op:
                raise ExpressionError(f"expected operator at position {pos}", position=pos)
            stack.append([None, pos, [], []])
            expect_op = True
        elif tok == ")":
            if not stack or expect_op:
                raise ExpressionError(f"unbalanced ')' at position {pos}", position=pos)
            op, op_pos, atoms, children = stack.pop()
            idx = _build(nodes, op, op_pos, atoms, children)
            if stack:
                stack[-1][3].append(idx)
            else:
                root = idx
        elif expect_op:
            if tok not in _ARITY:
                raise ExpressionError(f"unknown operator {tok!r} at position {pos}", position=pos)
            stack[-1][0] = tok
            expect_op = False
        else:
            if not stack:
                raise ExpressionError(f"atom outside parentheses at position {pos}", position=pos)
            if stack[-1][3]:
                raise ExpressionError(f"atom after subexpression at position {pos}", position=pos)
            stack[-1][2].append((pos, tok))
    if stack or root is None:
        raise ExpressionError("unexpected end of input", position=len(text))
    tree = ExpressionTree(tuple(nodes), root)
    names = tree.names()
    if len(set(names)) != len(names):
        dup = sorted({x for x in names if names.count(x) > 1})
        raise ExpressionError(f"vertex names introduced twice: {dup}")
    return tree


def _label(pos, tok) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise ExpressionError(f"label must be a positive integer, got {tok!r} at position {pos}", position=pos)
    return int(tok)


def _build(nodes, op, op_pos, atoms, children) -> int:
    n_atoms, n_children = _ARITY[op]
    if len(atoms) != n_atoms or len(children) != n_children:
        raise ExpressionError(
            f"{op} at position {op_pos} takes {n_atoms} atoms and {n_children} subexpressions",
            position=op_pos,
        )
    if op == "intro":
        (lpos, ltok), (npos, name) = atoms
        if not _NAME.match(name):
            raise ExpressionError(f"bad vertex name {name!r} at position {npos}", position=npos)
        node = Introduce(_label(lpos, ltok), name)
    elif op == "union":
        node = Union(*children)
    else:
        i, j = (_label(p, t) for p, t in atoms)
        if i == j:
            raise ExpressionError(f"{op} needs two distinct labels at position {op_pos}", position=op_pos)
        node = Relabel(i, j, children[0]) if op == "relabel" else Join(i, j, children[0])
    nodes.append(node)
    return len(nodes) - 1


def realize_graph(tree: ExpressionTree) -> tuple[Graph, list[int]]:
    """Build the labelled graph of the expression.

    Vertex ids follow the left-to-right order of introduce leaves; the
    returned graph's ``name_map`` maps names to ids. The second value holds
    each vertex's final label.
    """
    order = sorted(_descendants(tree.nodes, tree.root))
    ids: dict[str, int] = {}
    for idx in order:
        node = tree.nodes[idx]
        if isinstance(node, Introduce):
            ids[node.name] = len(ids)
    edges: set[tuple[int, int]] = set()
    # per node: label -> list of vertex ids
    classes: dict[int, dict[int, list[int]]] = {}
    for idx in order:
        node = tree.nodes[idx]
        if isinstance(node, Introduce):
            classes[idx] = {node.label: [ids[node.name]]}
        elif isinstance(node, Union):
            merged = {k: list(v) for k, v in classes.pop(node.left).items()}
            for k, v in classes.pop(node.right).items():
                merged.setdefault(k, []).extend(v)
            classes[idx] = merged
        elif isinstance(node, Relabel):
            cl = classes.pop(node.child)
            moved = cl.pop(node.src, [])
            if moved:
                cl.setdefault(node.dst, []).extend(moved)
            classes[idx] = cl
        else:
            cl = classes.pop(node.child)
            for a in cl.get(node.i, ()):
                for b in cl.get(node.j, ()):
                    edges.add((min(a, b), max(a, b)))
            classes[idx] = cl
    labels = [0] * len(ids)
    for lab, vs in classes[tree.root].items():
        for v in vs:
            labels[v] = lab
    return Graph.from_edges(len(ids), sorted(edges), name_map=ids), labels


# -- builders -----------------------------------------------------------------

def _chain_union(parts: list[str]) -> str:
    expr = parts[0]
    for p in parts[1:]:
        expr = f"(union {expr} {p})"
    return expr


def complete_expr(n: int) -> str:
    expr = "(intro 1 v0)"
    for k in range(1, n):
        expr = f"(relabel 2 1 (join 1 2 (union {expr} (intro 2 v{k}))))"
    return expr


def star_expr(leaves: int) -> str:
    """Centre ``v0``."""
    return f"(join 1 2 {_chain_union(['(intro 1 v0)'] + [f'(intro 2 v{k})' for k in range(1, leaves + 1)])})"


def path_expr(n: int) -> str:
    """Path ``v0 - v1 - ... - v(n-1)`` using three labels."""
    expr = "(intro 2 v0)"
    for k in range(1, n):
        expr = f"(relabel 3 2 (relabel 2 1 (join 2 3 (union {expr} (intro 3 v{k})))))"
    return expr


C5_EXPR = (
    "(join 1 2 (union (relabel 2 3 (join 2 3 (union (join 1 2 (union (intro 1 v0) (intro 2 v1)))"
    " (join 1 3 (union (intro 3 v2) (intro 1 v3)))))) (intro 2 v4)))"
)

C6_EXPR = (
    "(join 1 2 (union (relabel 2 3 (join 2 3 (union (join 2 3 (union (join 1 3 (union (intro 1 v0)"
    " (intro 3 v1))) (intro 2 v2))) (join 1 3 (union (intro 3 v3) (intro 1 v4)))))) (intro 2 v5)))"
)


def random_cograph_expr(n: int, rng: random.Random, prefix: str = "v") -> str:
    """Random cograph via a random cotree; two labels suffice."""
    counter = iter(range(n))

    def build(size):
        if size == 1:
            return f"(intro 1 {prefix}{next(counter)})"
        k = rng.randint(1, size - 1)
        left, right = build(k), build(size - k)
        if rng.random() < 0.5:
            return f"(union {left} {right})"
        return f"(relabel 2 1 (join 1 2 (union {left} (relabel 1 2 {right}))))"

    return build(n)


def random_expr(n: int, w: int, rng: random.Random, unary_prob: float = 0.6) -> str:
    """Random w-expression over ``n`` vertices (may realise a disconnected graph)."""
    counter = iter(range(n))

    def build(size):
        if size == 1:
            expr = f"(intro {rng.randint(1, w)} v{next(counter)})"
        else:
            k = rng.randint(1, size - 1)
            expr = f"(union {build(k)} {build(size - k)})"
        while w >= 2 and rng.random() < unary_prob:
            i, j = rng.sample(range(1, w + 1), 2)
            op = "join" if rng.random() < 0.65 else "relabel"
            expr = f"({op} {i} {j} {expr})"
        return expr

    return build(n)
