"""Line-oriented text formats. Files use 1-based vertex ids.

Graph::

    c comment
    p mcst <n> <m>
    e <u> <v>

Ordering ``o <v1> ... <vn>``, coordinates ``v <id> <x> <y>``, vertex sets
``s <v> <v> ...`` (may span several ``s`` lines; ``s`` alone is the empty
set). Spanning trees use the graph format.
"""
from __future__ import annotations

from typing import Iterable

from .errors import FormatError
from .graph import Graph


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("c"):
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}", line=lineno) from None


def parse_graph(text: str) -> Graph:
    n = m = None
    edges = []
    seen = set()
    for lineno, parts in _lines(text):
        tag = parts[0]
        if tag == "p":
            if n is not None or len(parts) != 4 or parts[1] != "mcst":
                raise FormatError(f"line {lineno}: expected 'p mcst <n> <m>'", line=lineno)
            n, m = _int(parts[2], lineno), _int(parts[3], lineno)
            if n < 0 or m < 0:
                raise FormatError(f"line {lineno}: negative size", line=lineno)
        elif tag == "e":
            if n is None:
                raise FormatError(f"line {lineno}: edge before 'p' line", line=lineno)
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'", line=lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise FormatError(f"line {lineno}: vertex id out of range 1..{n}", line=lineno)
            if u == v:
                raise FormatError(f"line {lineno}: self-loop at {u}", line=lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise FormatError(f"line {lineno}: duplicate edge {u} {v}", line=lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise FormatError(f"line {lineno}: unknown line type {tag!r}", line=lineno)
    if n is None:
        raise FormatError("missing 'p mcst' line")
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph, edges: Iterable[tuple[int, int]] = None) -> str:
    edges = list(g.edges() if edges is None else edges)
    out = [f"p mcst {g.n} {len(edges)}"]
    out += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(out) + "\n"


def parse_tree(text: str, n: int) -> list[tuple[int, int]]:
    t = parse_graph(text)
    if t.n != n:
        raise FormatError(f"tree has {t.n} vertices, graph has {n}")
    return t.edges()


def parse_ordering(text: str, n: int) -> list[int]:
    order = []
    for lineno, parts in _lines(text):
        if parts[0] != "o":
            raise FormatError(f"line {lineno}: expected 'o <v1> ... <vn>'", line=lineno)
        for tok in parts[1:]:
            v = _int(tok, lineno)
            if not 1 <= v <= n:
                raise FormatError(f"line {lineno}: vertex {v} out of range 1..{n}", line=lineno)
            order.append(v - 1)
    return order


def serialize_ordering(order: Iterable[int]) -> str:
    return "o " + " ".join(str(v + 1) for v in order) + "\n"


def parse_vertex_set(text: str, n: int) -> frozenset[int]:
    members = set()
    for lineno, parts in _lines(text):
        if parts[0] != "s":
            raise FormatError(f"line {lineno}: expected 's <v> ...'", line=lineno)
        for tok in parts[1:]:
            v = _int(tok, lineno)
            if not 1 <= v <= n:
                raise FormatError(f"line {lineno}: vertex {v} out of range 1..{n}", line=lineno)
            members.add(v - 1)
    return frozenset(members)


def serialize_vertex_set(s: Iterable[int]) -> str:
    return " ".join(["s"] + [str(v + 1) for v in sorted(s)]) + "\n"


def parse_coords(text: str, n: int) -> dict[int, tuple[int, int]]:
    coords = {}
    for lineno, parts in _lines(text):
        if parts[0] != "v" or len(parts) != 4:
            raise FormatError(f"line {lineno}: expected 'v <id> <x> <y>'", line=lineno)
        v, x, y = (_int(t, lineno) for t in parts[1:])
        if not 1 <= v <= n:
            raise FormatError(f"line {lineno}: vertex {v} out of range 1..{n}", line=lineno)
        if v - 1 in coords:
            raise FormatError(f"line {lineno}: duplicate coordinates for {v}", line=lineno)
        coords[v - 1] = (x, y)
    missing = [v + 1 for v in range(n) if v not in coords]
    if missing:
        raise FormatError(f"no coordinates for vertices {missing}")
    return coords


def serialize_coords(coords: dict[int, tuple[int, int]]) -> str:
    return "".join(f"v {v + 1} {x} {y}\n" for v, (x, y) in sorted(coords.items()))
