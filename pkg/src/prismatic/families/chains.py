"""Path and cycle of triangles graphs, their good partitions and the canonical colouring.

Set indices are 1-based as in the usual notation: a path has X_1..X_{2n+1},
a cycle has X_1..X_{2n} with indices read modulo 2n.  Odd sets split into
L, M, R; even sets carry a non-empty hat X^_{2i}.

A spec fixes the hat sizes, the rung widths |R_{2i-1}| = |L_{2i+1}| and the
number of non-hat vertices in each even set.  Everything else is forced by
the conditions except two kinds of choice, which are drawn from the seed:
which end of each R-L rung a non-hat vertex sees, and the adjacency between
non-hat vertices of two even sets at distance 2 mod 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import numpy as np

from ..errors import MalformedPartition, SpecInfeasible
from ..graph import Graph, build_graph, iter_bits, popcount, to_mask
from ..recognition import PARTITION_VIOLATION, Certificate, Coloring, Verdict, YES, is_prismatic
from ..rng import make_rng

PATH = "path"
CYCLE = "cycle"


@dataclass(frozen=True)
class TriangleChainSpec:
    """Sizes per even index 2i (i = 1..n): hat size, rung width, non-hat count."""

    kind: str
    n: int
    hats: tuple[int, ...] = ()
    rungs: tuple[int, ...] = ()
    extras: tuple[int, ...] = ()
    seed: int = 0
    edge_prob: float = 0.5
    max_rounds: int = 20

    def __post_init__(self):
        if self.kind not in (PATH, CYCLE):
            raise SpecInfeasible(f"kind must be 'path' or 'cycle', got {self.kind!r}")
        n = self.n
        # empty tuples mean "all singletons" / "all zero"
        if not self.hats:
            object.__setattr__(self, "hats", (1,) * max(n, 0))
        if not self.rungs:
            object.__setattr__(self, "rungs", (0,) * max(n, 0))
        if not self.extras:
            object.__setattr__(self, "extras", (0,) * max(n, 0))
        for name in ("hats", "rungs", "extras"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        _check_spec(self)

    @property
    def num_sets(self) -> int:
        return 2 * self.n + 1 if self.kind == PATH else 2 * self.n


def _check_spec(spec: TriangleChainSpec) -> None:
    n, h, w, x = spec.n, spec.hats, spec.rungs, spec.extras
    if spec.kind == PATH and n < 1:
        raise SpecInfeasible(f"a path of triangles needs n >= 1, got {n}")
    if spec.kind == CYCLE and (n < 5 or n % 3 != 2):
        raise SpecInfeasible(f"a cycle of triangles needs n >= 5 and n = 2 mod 3, got {n}")
    if not (len(h) == len(w) == len(x) == n):
        raise SpecInfeasible(f"hats/rungs/extras must each have length n={n}")
    if min(h) < 1:
        raise SpecInfeasible("P1: every hat must be non-empty")
    if min(w) < 0 or min(x) < 0:
        raise SpecInfeasible("rung widths and non-hat counts must be non-negative")
    pairs = range(n) if spec.kind == CYCLE else range(n - 1)
    for i in pairs:
        if h[i] > 1 and h[(i + 1) % n] > 1:
            raise SpecInfeasible(f"P1: hats X^_{2 * i + 2} and X^_{2 * ((i + 1) % n) + 2} both larger than 1")
    for i in range(n):
        if h[i] > 1 and w[i]:
            raise SpecInfeasible(f"P6.1: X^_{2 * i + 2} has size {h[i]} so its rung must be empty")
    if spec.kind == PATH:
        if h[0] != 1 or h[-1] != 1:
            raise SpecInfeasible("P7.1: X^_2 and X^_2n must be singletons")
        if w[0] == 0 and not (n >= 2 and h[1] > 1):
            raise SpecInfeasible("P7.3: R_1 empty needs n >= 2 and |X^_4| > 1")
        if w[-1] == 0 and not (n >= 2 and h[-2] > 1):
            raise SpecInfeasible("P7.3: L_2n+1 empty needs n >= 2 and |X^_2n-2| > 1")
    elif h[0] != 1 or h[-1] != 1:
        # M_1 has to be matched to both X^_2 and X^_2n
        raise SpecInfeasible("cycle clause of P5.4: X^_2 and X^_2n must be singletons")


@dataclass(frozen=True)
class GoodPartition:
    """X[k] for k = 1..num_sets (stored 0-based), with L/M/R on odd k and hats on even k."""

    kind: str
    n: int
    X: tuple[frozenset, ...]
    L: dict = field(default_factory=dict)
    M: dict = field(default_factory=dict)
    R: dict = field(default_factory=dict)
    hat: dict = field(default_factory=dict)

    @property
    def num_sets(self) -> int:
        return len(self.X)

    def idx(self, k: int) -> Optional[int]:
        """Normalise a 1-based index; ``None`` when it falls off a path."""
        if self.kind == CYCLE:
            return (k - 1) % self.num_sets + 1
        return k if 1 <= k <= self.num_sets else None

    def x(self, k: int) -> frozenset:
        j = self.idx(k)
        return frozenset() if j is None else self.X[j - 1]

    def part(self, name: str, k: int) -> frozenset:
        j = self.idx(k)
        if j is None:
            return frozenset()
        return getattr(self, name).get(j, frozenset())

    def rest(self, k: int) -> frozenset:
        return self.x(k) - self.part("hat", k)

    def non_triangle_vertices(self) -> frozenset:
        out: set = set()
        for i in range(1, self.n + 1):
            out |= self.rest(2 * i)
        return frozenset(out)

    def set_of(self, v: int) -> int:
        for k, xs in enumerate(self.X, 1):
            if v in xs:
                return k
        raise KeyError(v)


# ---------------------------------------------------------------- generation

def _build(spec: TriangleChainSpec, rng: np.random.Generator):
    n, N = spec.n, spec.num_sets
    cyc = spec.kind == CYCLE

    def norm(k):
        if cyc:
            return (k - 1) % N + 1
        return k if 1 <= k <= N else None

    def h(e):
        e = norm(e)
        return 0 if e is None else spec.hats[e // 2 - 1]

    def w(e):
        e = norm(e)
        return 0 if e is None else spec.rungs[e // 2 - 1]

    labels: list[str] = []
    X: dict[int, list[int]] = {}
    L: dict[int, list[int]] = {}
    M: dict[int, list[int]] = {}
    R: dict[int, list[int]] = {}
    hat: dict[int, list[int]] = {}

    def fresh(count, label):
        start = len(labels)
        labels.extend([label] * count)
        return list(range(start, start + count))

    for k in range(1, N + 1):
        if k % 2:
            left_e, right_e = norm(k - 1), norm(k + 1)
            L[k] = fresh(w(k - 1) if left_e else 0, f"X_{k}/L")
            M[k] = fresh(max(h(k - 1), h(k + 1)) if left_e and right_e else 0, f"X_{k}/M")
            R[k] = fresh(w(k + 1) if right_e else 0, f"X_{k}/R")
            X[k] = L[k] + M[k] + R[k]
        else:
            hat[k] = fresh(h(k), f"X_{k}/hat")
            X[k] = hat[k] + fresh(spec.extras[k // 2 - 1], f"X_{k}/rest")

    edges: set[tuple[int, int]] = set()

    def add(u, v):
        edges.add((u, v) if u < v else (v, u))

    def complete(a, b):
        for u in a:
            for v in b:
                add(u, v)

    # hats to the M sets around them, and the rung matchings
    hat_partner: dict[int, int] = {}
    rung_edges: dict[int, list[tuple[int, int]]] = {}
    for e in range(2, N + 1, 2):
        for k in (norm(e - 1), norm(e + 1)):
            if k is None or not M[k]:
                continue
            if h(e) == 1:
                complete(hat[e], M[k])
            else:
                perm = rng.permutation(len(M[k]))
                for u, j in zip(M[k], perm):
                    add(u, hat[e][int(j)])
                    hat_partner[u] = hat[e][int(j)]
        lk, rk = norm(e - 1), norm(e + 1)
        if h(e) == 1:
            complete(hat[e], R[lk] + L[rk])
            perm = rng.permutation(len(L[rk]))
            rung_edges[e] = [(u, L[rk][int(j)]) for u, j in zip(R[lk], perm)]
            for u, v in rung_edges[e]:
                add(u, v)
            complete(L[lk], X[rk])
            complete(X[lk], R[rk])
        else:
            rung_edges[e] = []
            for u in X[lk]:
                for v in X[rk]:
                    pu, pv = hat_partner.get(u), hat_partner.get(v)
                    if pu is None or pu != pv:
                        add(u, v)
        # non-hat vertices see exactly one end of each rung edge
        for y in X[e][len(hat[e]):]:
            for u, v in rung_edges[e]:
                add(y, u if rng.random() < 0.5 else v)

    # P2 on pairs that are neither consecutive nor two odd sets around one even set
    for p, q in combinations(range(1, N + 1), 2):
        d = q - p
        if d == 1 or (cyc and d == N - 1):
            continue
        if p % 2 and q % 2 and (d == 2 or (cyc and d == N - 2)):
            continue
        if d % 3 != 2:
            continue
        if p % 2 == 0 and q % 2 == 0:
            rest_p = set(X[p]) - set(hat[p])
            for u in X[p]:
                for v in X[q]:
                    if u in rest_p and v not in hat[q]:
                        if rng.random() < spec.edge_prob:
                            add(u, v)
                    else:
                        add(u, v)
        else:
            complete(X[p], X[q])

    g = build_graph(len(labels), sorted(edges), labels)
    fz = lambda d: {k: frozenset(v) for k, v in d.items()}   # noqa: E731
    part = GoodPartition(spec.kind, n, tuple(frozenset(X[k]) for k in range(1, N + 1)),
                         fz(L), fz(M), fz(R), fz(hat))
    return g, part


def _generate(spec: TriangleChainSpec) -> tuple[Graph, GoodPartition]:
    rng = make_rng(spec.seed)
    last = None
    for _ in range(spec.max_rounds):
        g, part = _build(spec, rng)
        last = verify_good_partition(g, part)
        if last:
            pv = is_prismatic(g)
            if pv:
                return g, part
            last = pv
    raise SpecInfeasible(f"{spec.kind} spec rejected after {spec.max_rounds} rounds",
                         last.certificate if last is not None else None, rounds=spec.max_rounds)


def path_of_triangles(spec: TriangleChainSpec) -> tuple[Graph, GoodPartition]:
    if spec.kind != PATH:
        raise SpecInfeasible(f"path_of_triangles got a {spec.kind} spec")
    return _generate(spec)


def cycle_of_triangles(spec: TriangleChainSpec) -> tuple[Graph, GoodPartition]:
    if spec.kind != CYCLE:
        raise SpecInfeasible(f"cycle_of_triangles got a {spec.kind} spec")
    return _generate(spec)


def triangle_chain(spec: TriangleChainSpec) -> tuple[Graph, GoodPartition]:
    return _generate(spec)


MINIMAL = TriangleChainSpec(PATH, 1, hats=(1,), rungs=(1,), extras=(0,))
LADDER = TriangleChainSpec(PATH, 6, hats=(1,) * 6, rungs=(1, 0, 0, 0, 0, 1), extras=(0,) * 6)
CYCLE8 = TriangleChainSpec(CYCLE, 8)
BUILTIN_SPECS = {"minimal": MINIMAL, "ladder": LADDER, "cycle8": CYCLE8}


def wide_ladder_spec(vertices: int = 500, n: int = 5, seed: int = 0) -> TriangleChainSpec:
    """All-singleton path whose rungs are widened to reach exactly ``vertices`` vertices.

    The hats and M sets account for 2n - 1 vertices; what is left goes into
    the rungs (two vertices each) and, if odd, one non-hat vertex in the middle.
    """
    left = vertices - (2 * n - 1)
    if left < 4:
        raise SpecInfeasible(f"{vertices} vertices is too few for a ladder with n={n}")
    extras = [0] * n
    if left % 2:
        extras[n // 2] = 1
        left -= 1
    total = left // 2
    rungs = [total // n + (1 if i < total % n else 0) for i in range(n)]
    return TriangleChainSpec(PATH, n, hats=(1,) * n, rungs=tuple(rungs), extras=tuple(extras), seed=seed)


def random_chain_spec(rng: np.random.Generator, kind: str = PATH, max_n: int = 6, max_hat: int = 3,
                      max_rung: int = 2, max_extra: int = 2, big_hat_prob: float = 0.35,
                      edge_prob: float = 0.5) -> TriangleChainSpec:
    """Draw a spec that satisfies every size constraint."""
    if kind == PATH:
        n = int(rng.integers(1, max_n + 1))
    else:
        choices = [m for m in range(5, max(max_n, 5) + 1) if m % 3 == 2]
        n = int(rng.choice(choices))
    hats = [1] * n
    for i in range(1, n - 1):
        if hats[i - 1] == 1 and max_hat > 1 and rng.random() < big_hat_prob:
            hats[i] = int(rng.integers(2, max_hat + 1))
    rungs = [int(rng.integers(0, max_rung + 1)) if hats[i] == 1 else 0 for i in range(n)]
    if kind == PATH:
        if rungs[0] == 0 and not (n >= 2 and hats[1] > 1):
            rungs[0] = 1
        if rungs[-1] == 0 and not (n >= 2 and hats[-2] > 1):
            rungs[-1] = 1
    extras = [int(rng.integers(0, max_extra + 1)) for _ in range(n)]
    return TriangleChainSpec(kind, n, tuple(hats), tuple(rungs), tuple(extras),
                             seed=int(rng.integers(0, 2**31)), edge_prob=edge_prob)


# ---------------------------------------------------------------- verification

def _no(clause: str, *vertices: int) -> Verdict:
    return Verdict(False, Certificate(PARTITION_VIOLATION, tuple(vertices), clause))


def _matched(g: Graph, a: frozenset, b: frozenset) -> Optional[tuple[int, ...]]:
    """``None`` if a and b are matched, else an offending vertex (or pair) as witness."""
    if a & b:
        return (min(a & b),)
    if len(a) != len(b):
        return tuple(sorted(a | b))[:2]
    am, bm = to_mask(a), to_mask(b)
    for u in sorted(a):
        if popcount(g.adj[u] & bm) != 1:
            return (u,)
    for v in sorted(b):
        if popcount(g.adj[v] & am) != 1:
            return (v,)
    return None


def _missing(g: Graph, a, b) -> Optional[tuple[int, int]]:
    bm = to_mask(b)
    for u in sorted(a):
        miss = bm & ~g.adj[u] & ~(1 << u)
        if miss:
            return (u, next(iter_bits(miss)))
    return None


def _present(g: Graph, a, b) -> Optional[tuple[int, int]]:
    bm = to_mask(b)
    for u in sorted(a):
        hit = g.adj[u] & bm
        if hit:
            return (u, next(iter_bits(hit)))
    return None


def verify_good_partition(g: Graph, p: GoodPartition) -> Verdict:
    """Check P1-P7 (P1-P6 modulo 2n for cycles) and the no-triangle remark.

    Returns the first violated clause in ``certificate.note`` with a witness.
    """
    N = p.num_sets
    if p.kind == PATH:
        if p.n < 1 or N != 2 * p.n + 1:
            raise MalformedPartition(f"path with n={p.n} needs {2 * p.n + 1} sets, got {N}")
    elif p.kind == CYCLE:
        if p.n < 5 or p.n % 3 != 2 or N != 2 * p.n:
            raise MalformedPartition(f"cycle with n={p.n} needs n >= 5, n = 2 mod 3 and {2 * p.n} sets")
    else:
        raise MalformedPartition(f"unknown kind {p.kind!r}")
    seen = 0
    for xs in p.X:
        m = to_mask(xs)
        if m & seen or any(v < 0 or v >= g.n for v in xs):
            raise MalformedPartition("the sets X_k overlap or name vertices outside the graph")
        seen |= m
    if seen != g.full_mask:
        raise MalformedPartition("the sets X_k do not cover every vertex")
    for k in range(2, N + 1, 2):
        if not p.part("hat", k) <= p.x(k):
            raise MalformedPartition(f"X^_{k} is not a subset of X_{k}")

    for k in range(1, N + 1):
        edge = _present(g, p.x(k), p.x(k))
        if edge:
            return _no(f"stable: X_{k}", *edge)

    n = p.n
    cyc = p.kind == CYCLE
    # P1
    for i in range(1, n + 1):
        if not p.part("hat", 2 * i):
            return _no(f"P1: X^_{2 * i} is empty")
    for i in range(1, n + 1 if cyc else n):
        a, b = p.part("hat", 2 * i), p.part("hat", 2 * i + 2)
        if len(a) > 1 and len(b) > 1:
            return _no(f"P1: X^_{2 * i} and X^_{p.idx(2 * i + 2)} both larger than 1", min(a), min(b))
    # P3
    for k in range(1, N + 1, 2):
        parts = [p.part(name, k) for name in "LMR"]
        if any(a & b for a, b in combinations(parts, 2)) or frozenset().union(*parts) != p.x(k):
            bad = sorted(p.x(k).symmetric_difference(frozenset().union(*parts)))
            return _no(f"P3: X_{k} is not L u M u R", *bad[:1])
    # P2
    for a, b in combinations(range(1, N + 1), 2):
        d = b - a
        if d == 1 or (cyc and d == N - 1):
            continue
        xa, xb = p.x(a), p.x(b)
        if d % 3 == 2:
            odd_step = a % 2 == 1 and b % 2 == 1 and (d == 2 or (cyc and d == N - 2))
            if odd_step:
                continue
            for u in sorted(xa):
                for v in iter_bits(to_mask(xb) & ~g.adj[u]):
                    if a % 2 == 0 and b % 2 == 0 and u not in p.part("hat", a) and v not in p.part("hat", b):
                        continue
                    return _no(f"P2.1: X_{a}, X_{b}", u, v)
        else:
            edge = _present(g, xa, xb)
            if edge:
                return _no(f"P2.2: X_{a}, X_{b}", *edge)
    # P4 - P6
    for i in range(1, n + 1):
        e, lk, rk = 2 * i, p.idx(2 * i - 1), p.idx(2 * i + 1)
        xe, hat, rest = p.x(e), p.part("hat", e), p.rest(e)
        Ll, Ml, Rl = (p.part(s, lk) for s in "LMR")
        Lr, Mr, Rr = (p.part(s, rk) for s in "LMR")
        edge = _present(g, xe, Ll | Rr)
        if edge:
            return _no(f"P4: X_{e} to L_{lk} u R_{rk}", *edge)
        edge = _present(g, rest, Ml | Mr)
        if edge:
            return _no(f"P4: X_{e} minus hat to M_{lk} u M_{rk}", *edge)
        rung = [(u, v) for u in sorted(Rl) for v in iter_bits(g.adj[u] & to_mask(Lr))]
        for y in sorted(rest):
            for u, v in rung:
                if g.has_edge(y, u) == g.has_edge(y, v):
                    return _no(f"P4: non-hat vertex of X_{e} and rung edge", y, u, v)
        if len(hat) == 1:
            (x,) = hat
            bad = _matched(g, Rl, Lr)
            if bad:
                return _no(f"P5.1: R_{lk}, L_{rk} not matched", *bad)
            edge = next(((u, v) for u in sorted(Ml | Rl) for v in iter_bits(g.adj[u] & to_mask(Lr | Mr))
                         if not (u in Rl and v in Lr)), None)
            if edge:
                return _no(f"P5.1: edge between M_{lk} u R_{lk} and L_{rk} u M_{rk}", *edge)
            pair = _missing(g, (x,), Rl | Ml | Lr | Mr)
            if pair:
                return _no(f"P5.2: X^_{e} to R_{lk} u M_{lk} u L_{rk} u M_{rk}", *pair)
            pair = _missing(g, Ll, p.x(rk)) or _missing(g, p.x(lk), Rr)
            if pair:
                return _no(f"P5.3: around X_{e}", *pair)
            checks = []
            if i > 1 or cyc:
                checks.append((Ml, p.idx(e - 2)))
            if i < n or cyc:
                checks.append((Mr, p.idx(e + 2)))
            for mset, other in checks:
                bad = _matched(g, mset, p.part("hat", other))
                if bad:
                    return _no(f"P5.4: M and X^_{other} not matched (around X_{e})", *bad)
            if cyc and (i == 1 or i == n) and p.part("M", 1):
                for other in (2, N):
                    bad = _matched(g, p.part("M", 1), p.part("hat", other))
                    if bad:
                        return _no(f"P5.4: M_1 and X^_{other} not matched", *bad)
        else:
            if Rl or Lr:
                return _no(f"P6.1: R_{lk} or L_{rk} non-empty", *sorted(Rl | Lr)[:1])
            hm = to_mask(hat)
            for u in sorted(p.x(lk)):
                for v in sorted(p.x(rk)):
                    shared = bool(g.adj[u] & g.adj[v] & hm)
                    if g.has_edge(u, v) == shared:
                        return _no(f"P6.2: X_{lk}, X_{rk} through X^_{e}", u, v)
    # P7
    if not cyc:
        for e in (2, 2 * n):
            if len(p.part("hat", e)) != 1:
                return _no(f"P7.1: |X^_{e}| != 1", *sorted(p.part("hat", e)))
        for name, k in (("L", 1), ("M", 1), ("M", N), ("R", N)):
            if p.part(name, k):
                return _no(f"P7.2: {name}_{k} non-empty", *sorted(p.part(name, k))[:1])
        if not p.part("R", 1) and not (n >= 2 and len(p.part("hat", 4)) > 1):
            return _no("P7.3: R_1 empty")
        if not p.part("L", N) and not (n >= 2 and len(p.part("hat", 2 * n - 2)) > 1):
            return _no(f"P7.3: L_{N} empty")
    # no-triangle remark
    in_tri = 0
    for t in g.triangles():
        in_tri |= to_mask(t)
    free = to_mask(p.non_triangle_vertices())
    diff = (free & in_tri) | (g.full_mask & ~in_tri & ~free)
    if diff:
        return _no("RT: triangle membership does not match the non-hat sets", next(iter_bits(diff)))
    return YES


def triangle_locations_ok(g: Graph, p: GoodPartition) -> Optional[tuple[int, int, int]]:
    """First triangle that sits neither in R u X^ u L (singleton hat) nor in X^ u M u X^; else ``None``."""
    allowed = []
    for i in range(1, p.n + 1):
        e = 2 * i
        if len(p.part("hat", e)) == 1:
            allowed.append(to_mask(p.part("R", e - 1) | p.part("hat", e) | p.part("L", e + 1)))
        allowed.append(to_mask(p.part("hat", e - 2) | p.part("M", e - 1) | p.part("hat", e)))
    for t in g.triangles():
        tm = to_mask(t)
        if not any(tm & a == tm for a in allowed):
            return t
    return None


def canonical_coloring(p: GoodPartition) -> Coloring:
    """A_k = union of X_j with j = k mod 3.  Only defined for paths.

    On a cycle 2n = 1 mod 3, so X_2n and X_1 would share a class while being
    adjacent.
    """
    if p.kind != PATH:
        raise SpecInfeasible("the canonical colouring is defined for paths of triangles only")
    classes: list[set] = [set(), set(), set()]
    for k, xs in enumerate(p.X, 1):
        classes[k % 3] |= xs
    return Coloring.from_sets(*classes)
