"""3-coloured graphs and their worn chain composition.

For terms G_1..G_n with colourings (A_i, B_i, C_i), the only edges allowed
between G_i and G_j (i < j) go A_i-B_j, B_i-C_j and C_i-A_j.  Such a pair
may be left out only if both ends lie in no triangle of their term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from ..errors import InvalidEdge, W3Violation
from ..graph import Graph, build_graph, to_mask
from ..recognition import Coloring
from .special import line_k33


@dataclass(frozen=True)
class ColoredGraph:
    graph: Graph
    coloring: Coloring

    def __post_init__(self):
        if not self.coloring.is_proper(self.graph):
            raise ValueError("colouring is not a proper 3-colouring of the graph")

    @property
    def n(self) -> int:
        return self.graph.n


def line_k33_colored(by: str = "columns") -> ColoredGraph:
    """L(K3,3) coloured by columns ({a^i_j : i} per class j) or by rows."""
    g = line_k33()
    if by == "columns":
        colors = [j for i in range(3) for j in range(3)]
    elif by == "rows":
        colors = [i for i in range(3) for _ in range(3)]
    else:
        raise ValueError(f"by must be 'columns' or 'rows', got {by!r}")
    return ColoredGraph(g, Coloring.from_assignment(colors))


def _offsets(terms: Sequence[ColoredGraph]) -> list[int]:
    out, acc = [], 0
    for t in terms:
        out.append(acc)
        acc += t.n
    return out


def permitted_pairs(terms: Sequence[ColoredGraph]) -> list[tuple[int, int]]:
    """Every cross pair (u, v), u in an earlier term, that W2 allows to be an edge.

    Vertices are numbered in the composed graph: term i is shifted by the
    sizes of the terms before it.
    """
    offs = _offsets(terms)
    colour = []
    for t in terms:
        colour.extend(t.coloring.color_of(v) for v in range(t.n))
    out = []
    for i, ti in enumerate(terms):
        for j in range(i + 1, len(terms)):
            for u in range(ti.n):
                cu = colour[offs[i] + u]
                for v in range(terms[j].n):
                    if colour[offs[j] + v] == (cu + 1) % 3:
                        out.append((offs[i] + u, offs[j] + v))
    return out


def triangle_free_vertices(terms: Sequence[ColoredGraph]) -> set[int]:
    """Composed-graph indices of the vertices lying in no triangle of their term."""
    out = set()
    for off, t in zip(_offsets(terms), terms):
        busy = 0
        for tri in t.graph.triangles():
            busy |= to_mask(tri)
        out.update(off + v for v in range(t.n) if not busy >> v & 1)
    return out


def worn_chain_compose(terms: Sequence[ColoredGraph], non_edges: Iterable[tuple[int, int]] = ()) -> ColoredGraph:
    """Compose the terms in order.  W2-permitted pairs are edges unless listed in ``non_edges``."""
    if not terms:
        raise ValueError("need at least one term")
    if any(t.n == 0 for t in terms):
        raise ValueError("terms must be non-empty")
    offs = _offsets(terms)
    allowed = permitted_pairs(terms)
    allowed_set = set(allowed)
    free = triangle_free_vertices(terms)
    skip = set()
    for u, v in non_edges:
        pair = (u, v) if (u, v) in allowed_set else (v, u)
        if pair not in allowed_set:
            raise InvalidEdge(f"({u}, {v}) is not a W2-permitted cross pair")
        if pair[0] not in free or pair[1] not in free:
            raise W3Violation(f"pair {pair} left non-adjacent but an end lies in a triangle", pair=pair)
        skip.add(pair)

    edges = []
    labels = []
    colours = []
    for idx, (off, t) in enumerate(zip(offs, terms), 1):
        edges.extend((off + u, off + v) for u, v in t.graph.edges())
        labels.extend(f"G{idx}:{t.graph.label(v)}" for v in range(t.n))
        colours.extend(t.coloring.color_of(v) for v in range(t.n))
    edges.extend(p for p in allowed if p not in skip)
    g = build_graph(len(labels), edges, labels)
    return ColoredGraph(g, Coloring.from_assignment(colours))


def random_non_edges(terms: Sequence[ColoredGraph], rng: np.random.Generator, prob: float = 0.5) -> list[tuple[int, int]]:
    """W3-valid non-edges: each permitted pair between triangle-free vertices dropped with ``prob``."""
    free = triangle_free_vertices(terms)
    return [p for p in permitted_pairs(terms) if p[0] in free and p[1] in free and rng.random() < prob]


def term_of(terms: Sequence[ColoredGraph], v: int) -> Optional[int]:
    for i, off in enumerate(_offsets(terms)):
        if off <= v < off + terms[i].n:
            return i
    return None
