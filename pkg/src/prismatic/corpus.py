"""Seeded instance corpora shared by the tests, the acceptance suite, the scripts and the CLI selftest."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from .errors import NotDiamondK4Free, SpecInfeasible
from .graph import Graph, build_graph, induced_subgraph, t_matrix
from .recognition import Coloring, is_cobridge_free, three_coloring
from .rng import make_rng
from .families.chains import (CYCLE, PATH, GoodPartition, TriangleChainSpec, canonical_coloring, random_chain_spec,
                              triangle_chain)
from .families.special import (MantledSpec, RingOfFiveSpec, cycle_graph, line_k33, mantled_line_k33, petersen, prism,
                               ring_of_five, schlafli_complement)
from .families.worn import ColoredGraph, line_k33_colored, random_non_edges, worn_chain_compose


@dataclass(frozen=True)
class Instance:
    name: str
    graph: Graph
    partition: Optional[GoodPartition] = None
    terms: Optional[tuple] = None


# ---------------------------------------------------------------- single draws

def chain_instance(rng: np.random.Generator, kind: str = PATH, **kw) -> Instance:
    spec = random_chain_spec(rng, kind=kind, **kw)
    g, part = triangle_chain(spec)
    return Instance(f"{kind}(n={spec.n},h={spec.hats},w={spec.rungs},x={spec.extras},seed={spec.seed})", g, part)


def fan_instance(rng: np.random.Generator, max_vertices: int = 200) -> Instance:
    """Path with n = 1: one hat, a rung matching of width w, at most one non-hat vertex."""
    extra = int(rng.integers(0, 2))
    w = int(rng.integers(1, (max_vertices - 1 - extra) // 2 + 1))
    spec = TriangleChainSpec(PATH, 1, (1,), (w,), (extra,), seed=int(rng.integers(0, 2**31)))
    g, part = triangle_chain(spec)
    return Instance(f"fan(w={w},x={extra},seed={spec.seed})", g, part)


def ring5_instance(rng: np.random.Generator, max_extra: int = 2) -> Instance:
    """Ring of five with sizes drawn from the prismatic region.

    A V_0 vertex, b_i and a V_i vertex form a triangle, so with V_0 non-empty
    every V_i has at most one vertex, and V_0 has exactly one unless all V_i
    are empty.
    """
    if rng.random() < 0.3:
        ring = [int(s) for s in rng.integers(0, 2, size=5)]
        v0 = 1 if any(ring) else int(rng.integers(1, max_extra + 1))
        sizes = (v0, *ring)
    else:
        sizes = (0, *(int(s) for s in rng.integers(0, max_extra + 1, size=5)))
    spec = RingOfFiveSpec(sizes, int(rng.integers(0, 2**31)))
    return Instance(f"ring5(sizes={sizes},seed={spec.seed})", ring_of_five(spec))


def mantled_instance(rng: np.random.Generator, max_extra: int = 2) -> Instance:
    upper = tuple(int(s) for s in rng.integers(0, max_extra + 1, size=3))
    lower = tuple(int(s) for s in rng.integers(0, max_extra + 1, size=3))
    spec = MantledSpec(upper, lower, int(rng.integers(0, 2**31)))
    return Instance(f"mantled(upper={upper},lower={lower},seed={spec.seed})", mantled_line_k33(spec))


def colored_term(rng: np.random.Generator) -> ColoredGraph:
    """A small 3-coloured prismatic graph: L(K3,3), a prism, an odd cycle or a short path of triangles."""
    pick = int(rng.integers(0, 6))
    if pick == 0:
        return line_k33_colored("columns" if rng.random() < 0.5 else "rows")
    if pick == 1:
        g = prism()
        return ColoredGraph(g, Coloring.from_assignment([0, 0, 1, 1, 2, 2]))
    if pick == 2:
        g = cycle_graph(int(rng.choice([4, 5, 6, 7])))
        return ColoredGraph(g, three_coloring(g))
    if pick == 3:
        n = int(rng.integers(1, 6))
        g = build_graph(n, [])
        return ColoredGraph(g, Coloring.from_assignment([int(c) for c in rng.integers(0, 3, size=n)]))
    spec = random_chain_spec(rng, PATH, max_n=3, max_hat=2, max_rung=1, max_extra=1)
    g, part = triangle_chain(spec)
    return ColoredGraph(g, canonical_coloring(part))


def _permute_colors(term: ColoredGraph, rng: np.random.Generator) -> ColoredGraph:
    perm = [int(c) for c in rng.permutation(3)]
    return ColoredGraph(term.graph, Coloring(tuple(term.coloring.classes[p] for p in perm)))


def worn_instance(rng: np.random.Generator, max_terms: int = 3, drop_prob: float = 0.5) -> Instance:
    terms = tuple(_permute_colors(colored_term(rng), rng) for _ in range(int(rng.integers(2, max_terms + 1))))
    non_edges = random_non_edges(terms, rng, drop_prob)
    cg = worn_chain_compose(terms, non_edges)
    sizes = ",".join(str(t.n) for t in terms)
    return Instance(f"worn(terms={sizes},dropped={len(non_edges)})", cg.graph, terms=terms)


def schlafli_subgraph(rng: np.random.Generator, lo: int = 6, hi: int = 27) -> Instance:
    k = int(rng.integers(lo, hi + 1))
    keep = sorted(int(v) for v in rng.choice(27, size=k, replace=False))
    sub, _ = induced_subgraph(schlafli_complement(), keep)
    return Instance(f"schlafli[{k}]", sub)


def mutate(g: Graph, rng: np.random.Generator) -> tuple[Graph, str]:
    """Flip one vertex pair, or delete one vertex."""
    if g.n >= 2 and rng.random() < 0.75:
        u, v = (int(x) for x in rng.choice(g.n, size=2, replace=False))
        u, v = min(u, v), max(u, v)
        edges = set(g.edges())
        edges ^= {(u, v)}
        return build_graph(g.n, sorted(edges), g.labels), f"flip({u},{v})"
    v = int(rng.integers(0, g.n))
    sub, _ = induced_subgraph(g, [w for w in range(g.n) if w != v])
    return sub, f"drop({v})"


def is_diamond_k4_free(g: Graph) -> bool:
    try:
        t_matrix(g)
    except NotDiamondK4Free:
        return False
    return True


# ---------------------------------------------------------------- corpora

def _draw_generator_instance(rng: np.random.Generator, small: bool) -> Instance:
    pick = int(rng.integers(0, 9))
    if pick == 0:
        return chain_instance(rng, PATH, max_n=3 if small else 6, max_hat=2, max_rung=2, max_extra=1)
    if pick == 1:
        return chain_instance(rng, CYCLE, max_n=5, max_hat=2, max_rung=1 if small else 2, max_extra=1)
    if pick == 2:
        return ring5_instance(rng, max_extra=1)
    if pick == 3:
        return mantled_instance(rng, max_extra=1)
    if pick == 4:
        return worn_instance(rng)
    if pick == 5:
        return schlafli_subgraph(rng, 4, 14 if small else 27)
    if pick == 6:
        return fan_instance(rng, 14 if small else 200)
    fixed = [("prism", prism()), ("c5", cycle_graph(5)), ("lk33", line_k33()), ("petersen", petersen())]
    name, g = fixed[int(rng.integers(0, len(fixed)))]
    return Instance(name, g)


def _shrink(inst: Instance, rng: np.random.Generator, max_n: int) -> Instance:
    if inst.graph.n <= max_n:
        return inst
    start = int(rng.integers(0, inst.graph.n))
    # grow a connected-ish window around a random vertex so the subgraph keeps triangles
    keep = [start]
    frontier = sorted(inst.graph.neighbors(start))
    while len(keep) < max_n:
        if frontier:
            v = frontier.pop(int(rng.integers(0, len(frontier))))
        else:
            rest = [w for w in range(inst.graph.n) if w not in keep]
            v = rest[int(rng.integers(0, len(rest)))]
        if v in keep:
            continue
        keep.append(v)
        frontier.extend(w for w in inst.graph.neighbors(v) if w not in keep and w not in frontier)
    sub, _ = induced_subgraph(inst.graph, sorted(keep))
    return Instance(f"{inst.name}[induced {len(keep)}]", sub)


def small_corpus(seed: int = 0, count: int = 200, max_n: int = 14) -> list[Instance]:
    """Diamond-free, K4-free graphs on at most ``max_n`` vertices.

    Roughly a third each of generator outputs, induced subgraphs of larger
    outputs, and single mutations of either.
    """
    rng = make_rng(seed)
    out: list[Instance] = []
    while len(out) < count:
        kind = len(out) % 3
        try:
            inst = _draw_generator_instance(rng, small=kind == 0)
        except SpecInfeasible:
            continue
        inst = _shrink(inst, rng, max_n)
        if kind == 2:
            g, how = mutate(inst.graph, rng)
            inst = Instance(f"{inst.name}+{how}", g)
        if inst.graph.n == 0 or not is_diamond_k4_free(inst.graph):
            continue
        out.append(inst)
    return out


def dichotomy_corpus(seed: int = 0, count: int = 500, max_vertices: int = 200,
                    accept: Optional[Callable[[Instance], bool]] = None) -> list[Instance]:
    """Co-bridge-free prismatic instances drawn round-robin from every generator."""
    rng = make_rng(seed)
    makers = [
        lambda: chain_instance(rng, PATH, max_n=6, max_hat=4, max_rung=3, max_extra=2),
        # wide hats, wide rungs or non-hat vertices on a cycle almost always leave an induced co-bridge
        lambda: chain_instance(rng, CYCLE, max_n=11, max_hat=1, max_rung=1, max_extra=0),
        lambda: fan_instance(rng, max_vertices),
        lambda: ring5_instance(rng),
        lambda: mantled_instance(rng),
        lambda: worn_instance(rng),
        lambda: schlafli_subgraph(rng),
    ]
    out: list[Instance] = []
    i = 0
    while len(out) < count:
        make = makers[i % len(makers)]
        i += 1
        try:
            inst = make()
        except SpecInfeasible:
            continue
        if inst.graph.n > max_vertices or not is_cobridge_free(inst.graph):
            continue
        if accept is not None and not accept(inst):
            continue
        out.append(inst)
    return out


def chain_corpus(seed: int = 0, count: int = 100, kinds=(PATH, CYCLE), cobridge_free: bool = False,
                 max_vertices: Optional[int] = None, **kw) -> Iterator[Instance]:
    rng = make_rng(seed)
    made = 0
    while made < count:
        kind = kinds[made % len(kinds)]
        inst = chain_instance(rng, kind, **kw)
        if max_vertices is not None and inst.graph.n > max_vertices:
            continue
        if cobridge_free and not is_cobridge_free(inst.graph):
            continue
        made += 1
        yield inst
