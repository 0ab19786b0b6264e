"""Named graphs and the two special not-3-colourable families (ring of five, mantled L(K3,3))."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..errors import SpecInfeasible
from ..graph import Graph, build_graph, complement, enumerate_triangles
from ..recognition import is_prismatic
from ..rng import make_rng


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def diamond() -> Graph:
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def prism() -> Graph:
    """Complement of C6: triangles {0,2,4} and {1,3,5} joined by a perfect matching."""
    g = complement(cycle_graph(6))
    return g.with_labels([f"s{i // 2 + 1}" if i % 2 == 0 else f"t{i // 2 + 1}" for i in range(6)])


def lk33_index(i: int, j: int) -> int:
    """Vertex index of a^i_j (1-based i, j) in :func:`line_k33`."""
    return 3 * (i - 1) + (j - 1)


def _lk33_edges(offset: int = 0):
    for (i, j), (k, l) in combinations([(i, j) for i in range(1, 4) for j in range(1, 4)], 2):
        if i != k and j != l:
            yield offset + lk33_index(i, j), offset + lk33_index(k, l)


def line_k33() -> Graph:
    """L(K3,3): a^i_j ~ a^i'_j' iff i != i' and j != j'."""
    labels = [f"a^{i}_{j}" for i in range(1, 4) for j in range(1, 4)]
    return build_graph(9, _lk33_edges(), labels)


def schlafli_complement() -> Graph:
    """The 27-vertex complement of the Schlafli graph.

    Blocks r, s, t occupy indices 0-8, 9-17, 18-26, each ordered like
    :func:`line_k33`.  Inside a block the L(K3,3) rule applies; r^i_j ~ s^i'_j',
    s^i_j ~ t^i'_j' and t^i_j ~ r^i'_j' exactly when j = i'.
    """
    edges = []
    for block in range(3):
        edges.extend(_lk33_edges(9 * block))
    for block in range(3):
        nxt = (block + 1) % 3
        for i in range(1, 4):
            for j in range(1, 4):
                for jj in range(1, 4):
                    edges.append((9 * block + lk33_index(i, j), 9 * nxt + lk33_index(j, jj)))
    labels = [f"{b}^{i}_{j}" for b in "rst" for i in range(1, 4) for j in range(1, 4)]
    return build_graph(27, edges, labels)


def core_ring_of_five() -> Graph:
    return ring_of_five(RingOfFiveSpec())


@dataclass(frozen=True)
class RingOfFiveSpec:
    """Sizes of the stable sets V_0..V_5 around the core, plus the seed for V_i-V_i+1 edges."""

    sizes: tuple[int, int, int, int, int, int] = (0, 0, 0, 0, 0, 0)
    seed: int = 0
    edge_prob: float = 0.5

    def __post_init__(self):
        if len(self.sizes) != 6 or any(s < 0 for s in self.sizes):
            raise SpecInfeasible(f"ring of five needs six non-negative sizes, got {self.sizes}")


def ring_of_five(spec: RingOfFiveSpec) -> Graph:
    """Core a_1..a_5, b_1..b_5 (indices 0-9) followed by V_0, V_1, ..., V_5.

    With V_0 non-empty any edge between V_i and V_i+1 would close a triangle
    with a V_0 vertex that b_i sees twice, so those edges are only drawn when
    V_0 is empty.
    """
    a = lambda i: (i - 1) % 5          # noqa: E731
    b = lambda i: 5 + (i - 1) % 5      # noqa: E731
    edges = []
    for i in range(1, 6):
        edges += [(a(i), a(i + 1)), (a(i), b(i + 3)), (a(i + 1), b(i + 3)), (a(i), b(i))]
    labels = [f"a{i}" for i in range(1, 6)] + [f"b{i}" for i in range(1, 6)]

    groups: list[list[int]] = []
    nxt = 10
    for idx, size in enumerate(spec.sizes):
        groups.append(list(range(nxt, nxt + size)))
        labels += [f"V{idx}"] * size
        nxt += size
    n = nxt
    for x in groups[0]:
        edges += [(x, b(i)) for i in range(1, 6)]
        for i in range(1, 6):
            edges += [(x, y) for y in groups[i]]
    for i in range(1, 6):
        for y in groups[i]:
            edges += [(y, a(i - 1)), (y, b(i)), (y, a(i + 1))]

    rng = make_rng(spec.seed)
    prob = spec.edge_prob if not groups[0] else 0.0
    for i in range(1, 6):
        j = i % 5 + 1
        for y in groups[i]:
            for z in groups[j]:
                if rng.random() < prob:
                    edges.append((y, z))
    g = build_graph(n, edges, labels)
    verdict = is_prismatic(g)
    if not verdict:
        raise SpecInfeasible("ring of five spec produced a non-prismatic graph", verdict.certificate, rounds=1)
    return g


@dataclass(frozen=True)
class MantledSpec:
    """Sizes of V^1..V^3 (``upper``, attached to rows) and V_1..V_3 (``lower``, attached to columns)."""

    upper: tuple[int, int, int] = (0, 0, 0)
    lower: tuple[int, int, int] = (0, 0, 0)
    seed: int = 0
    edge_prob: float = 0.3
    max_rounds: int = 200

    def __post_init__(self):
        if len(self.upper) != 3 or len(self.lower) != 3 or min(self.upper + self.lower) < 0:
            raise SpecInfeasible("mantled L(K3,3) needs two triples of non-negative sizes")


def _side_edges(rng, groups, prob):
    out = []
    for gi, gj in combinations(range(3), 2):
        for u in groups[gi]:
            for v in groups[gj]:
                if rng.random() < prob:
                    out.append((u, v))
    return out


def mantled_line_k33(spec: MantledSpec) -> Graph:
    """L(K3,3) on 0-8, then V^1, V^2, V^3, then V_1, V_2, V_3.

    Edges inside each side are resampled until that side is triangle-free.
    """
    edges = list(_lk33_edges())
    labels = [f"a^{i}_{j}" for i in range(1, 4) for j in range(1, 4)]
    upper, lower = [], []
    nxt = 9
    for i, size in enumerate(spec.upper, 1):
        upper.append(list(range(nxt, nxt + size)))
        labels += [f"V^{i}"] * size
        edges += [(v, lk33_index(i, j)) for v in upper[-1] for j in range(1, 4)]
        nxt += size
    for j, size in enumerate(spec.lower, 1):
        lower.append(list(range(nxt, nxt + size)))
        labels += [f"V_{j}"] * size
        edges += [(v, lk33_index(i, j)) for v in lower[-1] for i in range(1, 4)]
        nxt += size
    n = nxt

    rng = make_rng(spec.seed)
    side_edges = {}
    for name, groups in (("upper", upper), ("lower", lower)):
        members = sorted(v for grp in groups for v in grp)
        for _ in range(spec.max_rounds):
            cand = _side_edges(rng, groups, spec.edge_prob)
            if not enumerate_triangles(build_graph(n, cand)):
                side_edges[name] = cand
                break
        else:
            raise SpecInfeasible(f"no triangle-free {name} side on {len(members)} vertices after "
                                 f"{spec.max_rounds} rounds", rounds=spec.max_rounds)
    g = build_graph(n, edges + side_edges["upper"] + side_edges["lower"], labels)
    verdict = is_prismatic(g)
    if not verdict:
        raise SpecInfeasible("mantled spec produced a non-prismatic graph", verdict.certificate)
    return g
