"""Graph representation, boundary subgraphs and structural predicates.

Vertices are contiguous ids ``0..n-1``. Vertex subsets are plain
``frozenset``s of ids; helpers accept any iterable and normalise it.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import chain
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import DisconnectedGraph, FormatError, InstanceTooLarge, NotCoverable

Edge = tuple[int, int]

DEFAULT_CUT_BOUND = 20
_BULK_EDGES = 4096  # above this, build the adjacency with numpy


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected simple graph in adjacency-list form."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    name_map: Optional[dict] = field(default=None, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], name_map=None) -> "Graph":
        edges = edges if isinstance(edges, (list, tuple)) else list(edges)
        if len(edges) >= _BULK_EDGES:
            return cls._from_edge_array(n, edges, name_map)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise FormatError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise FormatError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), name_map)

    @classmethod
    def _from_edge_array(cls, n: int, edges, name_map) -> "Graph":
        arr = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        u, v = arr[:, 0], arr[:, 1]
        bad = np.flatnonzero((u < 0) | (u >= n) | (v < 0) | (v >= n) | (u == v))
        if bad.size:
            a, b = (int(x) for x in arr[bad[0]])
            raise FormatError(f"self-loop at {a}" if a == b else f"edge ({a}, {b}) out of range for n={n}")
        src = np.concatenate([u, v])
        dst = np.concatenate([v, u])
        idx = np.lexsort((dst, src))
        src, dst = src[idx], dst[idx]
        dup = np.flatnonzero((src[1:] == src[:-1]) & (dst[1:] == dst[:-1]))
        if dup.size:
            raise FormatError(f"duplicate edge ({int(src[dup[0]])}, {int(dst[dup[0]])})")
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
        # slicing one fresh list keeps each vertex's neighbours together in memory
        flat, ptr = dst.tolist(), indptr.tolist()
        g = cls(n, tuple(tuple(flat[ptr[i]:ptr[i + 1]]) for i in range(n)), name_map)
        g.__dict__["csr"] = (indptr, dst)
        return g

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]], name_map=None) -> "Graph":
        adj = tuple(tuple(sorted(set(a))) for a in adjacency)
        n = len(adj)
        for u, a in enumerate(adj):
            for v in a:
                if v == u or not 0 <= v < n or u not in adj[v]:
                    raise FormatError(f"adjacency is not simple/symmetric at ({u}, {v})")
        return cls(n, adj, name_map)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    @cached_property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return frozenset(self.adjacency[v]) | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """``(indptr, indices)``: neighbours of ``v`` are ``indices[indptr[v]:indptr[v + 1]]``."""
        deg = np.fromiter(map(len, self.adjacency), dtype=np.int64, count=self.n)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.fromiter(chain.from_iterable(self.adjacency), dtype=np.int64, count=int(indptr[-1]))
        return indptr, indices

    @cached_property
    def _adjsets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    @cached_property
    def nbr_masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as integer bitmasks."""
        masks = []
        for a in self.adjacency:
            m = 0
            for v in a:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges)


@dataclass(frozen=True)
class SpanningTree:
    edges: tuple[Edge, ...]

    def is_spanning_tree_of(self, g: Graph) -> bool:
        if len(self.edges) != max(g.n - 1, 0):
            return False
        if any(not g.has_edge(u, v) for u, v in self.edges):
            return False
        return len(connected_components(Graph.from_edges(g.n, self.edges))) == 1


@dataclass(frozen=True)
class Witness:
    kind: str  # "induced-P5" | "odd-cycle" | "diameter-pair"
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class StructuralReport:
    bipartite: bool
    max_degree: int
    connected: bool
    odd_cycle: Optional[Witness] = None


def as_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    vs = frozenset(s)
    bad = [v for v in vs if not 0 <= v < g.n]
    if bad:
        raise ValueError(f"vertices {sorted(bad)} outside 0..{g.n - 1}")
    return vs


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Star with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def boundary_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Spanning subgraph of ``g`` keeping exactly the edges with an endpoint in ``s``."""
    s = as_vertex_set(g, s)
    return Graph.from_edges(g.n, [(u, v) for u, v in g.edges() if u in s or v in s])


def connected_components(g: Graph) -> list[list[int]]:
    """Blocks ordered by minimum contained id; each block sorted."""
    seen = [False] * g.n
    blocks = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        block = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    block.append(v)
                    queue.append(v)
        blocks.append(sorted(block))
    return blocks


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def boundary_components(g: Graph, s: Iterable[int]) -> list[list[int]]:
    """Components of the boundary subgraph, without materialising it."""
    s = as_vertex_set(g, s)
    seen = [False] * g.n
    blocks = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        block = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            u_in = u in s
            for v in g.adjacency[u]:
                if not seen[v] and (u_in or v in s):
                    seen[v] = True
                    block.append(v)
                    queue.append(v)
        blocks.append(sorted(block))
    return blocks


def has_covered_spanning_tree(g: Graph, s: Iterable[int]) -> bool:
    """True iff some spanning tree of ``g`` is covered by ``s``.

    Holds exactly when the boundary subgraph for ``s`` is connected. A
    single vertex is coverable by the empty set.
    """
    return len(boundary_components(g, s)) <= 1


def extract_covered_spanning_tree(g: Graph, s: Iterable[int]) -> SpanningTree:
    """Grow a tree from vertex 0, always taking the lexicographically smallest
    admissible crossing edge ``(u, v)`` (``u`` in the tree, ``u`` or ``v`` in ``s``)."""
    s = as_vertex_set(g, s)
    if g.n == 0:
        return SpanningTree(())
    in_tree = [False] * g.n
    heap: list[Edge] = []

    def add(u):
        in_tree[u] = True
        u_in = u in s
        for v in g.adjacency[u]:
            if not in_tree[v] and (u_in or v in s):
                heapq.heappush(heap, (u, v))

    add(0)
    edges = []
    while len(edges) < g.n - 1:
        while heap and in_tree[heap[0][1]]:
            heapq.heappop(heap)
        if not heap:
            raise NotCoverable(
                f"no admissible crossing edge after {len(edges) + 1} vertices",
                tree_size=len(edges) + 1,
            )
        u, v = heapq.heappop(heap)
        edges.append((u, v))
        add(v)
    return SpanningTree(tuple(edges))


def is_vertex_cover(edges: Iterable[Sequence[int]], s: Iterable[int]) -> bool:
    s = frozenset(s)
    return all(u in s or v in s for u, v in edges)


def cut_condition_holds(g: Graph, s: Iterable[int], bound: int = DEFAULT_CUT_BOUND) -> bool:
    """Exhaustive cut check: every nonempty proper ``C`` has a crossing edge
    touching ``s``.

    Cuts are enumerated as the ``2**(n-1) - 1`` sides not containing vertex
    ``n-1`` (each cut and its complement ask the same question).
    """
    if g.n > bound:
        raise InstanceTooLarge(f"cut enumeration limited to n <= {bound}, got {g.n}")
    s = as_vertex_set(g, s)
    if g.n < 2:
        return True
    cuts = np.arange(1, 1 << (g.n - 1), dtype=np.int64)
    ok = np.zeros(cuts.shape, dtype=bool)
    masks = g.nbr_masks
    for v in s:
        nbr = np.int64(masks[v])
        inside = ((cuts >> v) & 1).astype(bool)
        crossing = np.where(inside, nbr & ~cuts, nbr & cuts) != 0
        ok |= crossing
    return bool(ok.all())


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def diameter(g: Graph) -> int:
    return diameter_with_witness(g)[0]


def diameter_with_witness(g: Graph) -> tuple[int, Witness]:
    if g.n == 0:
        raise DisconnectedGraph("empty graph")
    best, pair = 0, (0, 0)
    for u in range(g.n):
        dist = bfs_distances(g, u)
        if min(dist) < 0:
            raise DisconnectedGraph("diameter of a disconnected graph")
        far = max(range(g.n), key=dist.__getitem__)
        if dist[far] > best:
            best, pair = dist[far], (u, far)
    return best, Witness("diameter-pair", pair)


def find_induced_path(g: Graph, length: int) -> Optional[tuple[int, ...]]:
    """Depth-first extension of induced paths; the first one on ``length``
    vertices, or None."""
    adj = g._adjsets

    def extend(path):
        if len(path) == length:
            return path
        last = path[-1]
        for x in g.adjacency[last]:
            if x in path:
                continue
            if any(x in adj[p] for p in path[:-1]):
                continue
            found = extend(path + (x,))
            if found:
                return found
        return None

    for v in range(g.n):
        found = extend((v,))
        if found:
            return found
    return None


def find_induced_p5(g: Graph) -> Optional[Witness]:
    found = find_induced_path(g, 5)
    return None if found is None else Witness("induced-P5", found)


def is_p5_free(g: Graph) -> tuple[bool, Optional[Witness]]:
    w = find_induced_p5(g)
    return w is None, w


def is_induced_path(g: Graph, vertices: Sequence[int]) -> bool:
    k = len(vertices)
    if len(set(vertices)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            if g.has_edge(vertices[i], vertices[j]) != (j == i + 1):
                return False
    return True


def structural_checks(g: Graph) -> StructuralReport:
    """Bipartiteness by BFS 2-colouring, maximum degree, connectivity."""
    color = [-1] * g.n
    parent = [-1] * g.n
    odd = None
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue and odd is None:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    odd = Witness("odd-cycle", _odd_cycle(parent, u, v))
                    break
        if odd is not None:
            break
    return StructuralReport(
        bipartite=odd is None,
        max_degree=max((len(a) for a in g.adjacency), default=0),
        connected=is_connected(g),
        odd_cycle=odd,
    )


def _odd_cycle(parent, u, v):
    # tree paths from u and v up to their lowest common ancestor, closed by uv
    up = [u]
    while parent[up[-1]] >= 0:
        up.append(parent[up[-1]])
    pos = {x: i for i, x in enumerate(up)}
    down = [v]
    while down[-1] not in pos:
        down.append(parent[down[-1]])
    lca = down[-1]
    return tuple(up[: pos[lca] + 1] + down[-2::-1])
