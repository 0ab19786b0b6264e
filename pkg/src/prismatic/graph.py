"""Immutable simple graphs on vertices ``0..n-1``.

Adjacency is a dense bit matrix: row ``v`` is a Python int whose bit ``w`` is set
iff ``v`` and ``w`` are adjacent.  Everything algorithmic in the package works on
these rows directly, so set operations on neighbourhoods are single int ops.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Optional

from .errors import InvalidEdge, InvalidVertex, NotDiamondK4Free, NotPrismaticWitness

Triangle = tuple[int, int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph.  Treat instances as values: never mutate ``adj``."""

    __slots__ = ("n", "adj", "labels", "_triangles")

    def __init__(self, n: int, adj: Sequence[int], labels: Optional[Sequence[str]] = None):
        self.n = n
        self.adj = tuple(adj)
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} vertices")
        self.labels = labels
        self._triangles: Optional[tuple[Triangle, ...]] = None

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return bits_to_tuple(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def is_stable(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def triangles(self) -> tuple[Triangle, ...]:
        if self._triangles is None:
            self._triangles = tuple(_triangles(self))
        return self._triangles

    def with_labels(self, labels: Optional[Sequence[str]]) -> "Graph":
        return Graph(self.n, self.adj, labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]], labels: Optional[Sequence[str]] = None) -> Graph:
    """Build a graph from an edge list; duplicate edges are ignored."""
    if n < 0:
        raise InvalidVertex(f"negative vertex count {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdge(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def _triangles(g: Graph) -> Iterator[Triangle]:
    adj = g.adj
    for a in range(g.n):
        above_a = adj[a] >> (a + 1) << (a + 1)
        for b in iter_bits(above_a):
            for c in iter_bits(adj[a] & adj[b] >> (b + 1) << (b + 1)):
                yield (a, b, c)


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """Every triangle once, as sorted triples in lexicographic order."""
    return list(g.triangles())


def triangle_mask(t: Iterable[int]) -> int:
    return to_mask(t)


# Entries of the T matrix besides a witness vertex (witnesses are >= 0).
NOT_ADJACENT = -2
NO_COMMON_NEIGHBOR = -1


class TMatrix:
    """Adjacency annotated with the unique common neighbour of each edge.

    ``entry(v, w)`` is ``NOT_ADJACENT``, ``NO_COMMON_NEIGHBOR`` or the vertex ``x``
    such that ``{v, w, x}`` is a triangle.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, n: int, rows: Sequence[dict[int, int]]):
        self.n = n
        self._rows = tuple(rows)

    def entry(self, v: int, w: int) -> int:
        return self._rows[v].get(w, NOT_ADJACENT)

    def row(self, v: int) -> dict[int, int]:
        """Adjacent ``w`` -> witness (or ``NO_COMMON_NEIGHBOR``)."""
        return dict(self._rows[v])

    def triangles_through(self, v: int) -> list[Triangle]:
        """Triangles containing ``v``, read off row ``v`` in O(deg v)."""
        out = set()
        for w, x in self._rows[v].items():
            if x >= 0:
                out.add(tuple(sorted((v, w, x))))
        return sorted(out)


def t_matrix(g: Graph) -> TMatrix:
    """Compute T(G) in O(n^3) bit operations; requires a {diamond, K4}-free graph."""
    rows: list[dict[int, int]] = [dict() for _ in range(g.n)]
    adj = g.adj
    for v in range(g.n):
        for w in iter_bits(adj[v] >> (v + 1)):
            w += v + 1
            common = adj[v] & adj[w]
            if not common:
                x = NO_COMMON_NEIGHBOR
            else:
                low = common & -common
                x = low.bit_length() - 1
                rest = common ^ low
                if rest:
                    x2 = (rest & -rest).bit_length() - 1
                    raise NotDiamondK4Free((v, w, x, x2))
            rows[v][w] = x
            rows[w][v] = x
    return TMatrix(g.n, rows)


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``; returns it with the map new index -> old index."""
    members = sorted(set(s))
    for v in members:
        if not 0 <= v < g.n:
            raise InvalidVertex(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        row = 0
        for w in iter_bits(g.adj[v]):
            i = index.get(w)
            if i is not None:
                row |= 1 << i
        adj.append(row)
    labels = [g.labels[v] for v in members] if g.labels is not None else None
    return Graph(len(members), adj, labels), tuple(members)


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.adj)], g.labels)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(row << offset for row in h.adj)
        offset += h.n
    return Graph(offset, adj)


def disjoint_triangle_matching(g: Graph, t1: Triangle, t2: Triangle) -> list[tuple[int, int]]:
    """The perfect matching between two vertex-disjoint triangles of a prismatic graph.

    Returned as ``[(s, t), ...]`` following the order of ``t1``.
    """
    if set(t1) & set(t2):
        raise NotPrismaticWitness(f"triangles {t1} and {t2} share a vertex")
    m2 = to_mask(t2)
    pairs = []
    for s in t1:
        hits = g.adj[s] & m2
        if popcount(hits) != 1:
            raise NotPrismaticWitness(f"vertex {s} has {popcount(hits)} neighbours in {tuple(t2)}")
        pairs.append((s, hits.bit_length() - 1))
    if len({t for _, t in pairs}) != 3:
        raise NotPrismaticWitness(f"adjacency between {t1} and {t2} is not a matching")
    return pairs
