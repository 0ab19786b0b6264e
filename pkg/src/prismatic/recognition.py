"""Certificate-producing checkers for prismatic graphs and their relatives.

Negative answers always carry a :class:`Certificate` that can be re-checked
against the host graph without trusting the checker that produced it.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Any, Optional, Sequence

from .errors import NotPrismatic, NotPrismaticWitness, ScaleLimitExceeded
from .graph import Graph, Triangle, bits_to_tuple, build_graph, disjoint_triangle_matching, iter_bits, popcount, to_mask
from .hitting import bounded_hitting_set

PRISMATIC_VIOLATION = "PrismaticViolation"
FORBIDDEN_SUBGRAPH = "ForbiddenSubgraph"
ODD_PARITY_CYCLE = "OddParityCycle"
COLORING_WITNESS = "ColoringWitness"
SUBSTANTIALITY_WITNESS = "SubstantialityWitness"
PARTITION_VIOLATION = "PartitionViolation"


@dataclass(frozen=True)
class Certificate:
    kind: str
    vertices: tuple[int, ...]
    note: str = ""
    triangles: tuple[Triangle, ...] = ()

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.note:
            d["note"] = self.note
        if self.triangles:
            d["triangles"] = [list(t) for t in self.triangles]
        return d


@dataclass(frozen=True)
class Verdict:
    """Outcome of a yes/no check.  Truthy iff the answer is yes."""

    ok: bool
    certificate: Optional[Certificate] = None
    value: Any = None

    def __bool__(self) -> bool:
        return self.ok


YES = Verdict(True)


@dataclass(frozen=True)
class Coloring:
    """A partition of the vertex set into three stable sets A, B, C."""

    classes: tuple[frozenset, frozenset, frozenset]

    @classmethod
    def from_assignment(cls, colors: Sequence[int]) -> "Coloring":
        parts: list[set] = [set(), set(), set()]
        for v, c in enumerate(colors):
            parts[c].add(v)
        return cls(tuple(frozenset(p) for p in parts))

    @classmethod
    def from_sets(cls, a, b, c) -> "Coloring":
        return cls((frozenset(a), frozenset(b), frozenset(c)))

    def color_of(self, v: int) -> int:
        for i, cls_ in enumerate(self.classes):
            if v in cls_:
                return i
        raise KeyError(v)

    def is_proper(self, g: Graph) -> bool:
        union = set().union(*self.classes)
        if union != set(range(g.n)) or sum(len(c) for c in self.classes) != g.n:
            return False
        return all(g.is_stable(c) for c in self.classes)


@dataclass(frozen=True)
class Orientation:
    """For each triangle, a cyclic order ``(x, y, z)`` meaning x -> y -> z -> x."""

    cyclic: dict = field(hash=False)

    def successor(self, t: Triangle, v: int) -> int:
        order = self.cyclic[t]
        return order[(order.index(v) + 1) % 3]


# --------------------------------------------------------------------- prismatic

def is_prismatic(g: Graph) -> Verdict:
    """Every vertex outside a triangle has exactly one neighbour in it."""
    adj = g.adj
    full = g.full_mask
    for t in g.triangles():
        a, b, c = t
        ra, rb, rc = adj[a], adj[b], adj[c]
        exactly_one = (ra ^ rb ^ rc) & ~(ra & rb & rc)
        bad = full & ~exactly_one & ~to_mask(t)
        if bad:
            v = (bad & -bad).bit_length() - 1
            k = popcount(adj[v] & to_mask(t))
            return Verdict(False, Certificate(PRISMATIC_VIOLATION, (v, a, b, c), f"{k} neighbours in triangle"))
    return YES


def check_prismatic_certificate(g: Graph, cert: Certificate) -> bool:
    v, a, b, c = cert.vertices
    return g.is_clique((a, b, c)) and v not in (a, b, c) and sum(g.has_edge(v, x) for x in (a, b, c)) != 1


# ----------------------------------------------------------- induced patterns

class Pattern(str, enum.Enum):
    C4_2K1 = "C4_2K1"
    DIAMOND = "DIAMOND"
    K4 = "K4"
    C4 = "C4"
    CLAW = "CLAW"
    PRISM = "PRISM"
    C4_K1 = "C4_K1"
    P3 = "P3"


_PATTERN_EDGES = {
    Pattern.C4_2K1: (6, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    Pattern.DIAMOND: (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    Pattern.K4: (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    Pattern.C4: (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    Pattern.CLAW: (4, [(0, 1), (0, 2), (0, 3)]),
    Pattern.PRISM: (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]),
    Pattern.C4_K1: (5, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    Pattern.P3: (3, [(0, 1), (1, 2)]),
}


def pattern_graph(pattern: Pattern) -> Graph:
    n, edges = _PATTERN_EDGES[Pattern(pattern)]
    return build_graph(n, edges)


def induces_pattern(g: Graph, vertices: Sequence[int], pattern: Pattern) -> bool:
    """True iff ``vertices`` (in the given order) induce ``pattern`` with its canonical labelling."""
    p = pattern_graph(pattern)
    if len(vertices) != p.n or len(set(vertices)) != p.n:
        return False
    return all(g.has_edge(vertices[i], vertices[j]) == p.has_edge(i, j)
               for i in range(p.n) for j in range(i + 1, p.n))


def _above(v: int) -> int:
    return -1 << (v + 1)


def _nonadjacent_pair(adj, mask: int) -> Optional[tuple[int, int]]:
    for u in iter_bits(mask):
        other = mask & ~adj[u] & _above(u)
        if other:
            return u, (other & -other).bit_length() - 1
    return None


def induced_c4s(g: Graph, allowed: Optional[int] = None):
    """Yield each induced C4 once as ``(a, b, c, d)`` in cycle order, ``a`` minimal."""
    adj = g.adj
    allowed = g.full_mask if allowed is None else allowed
    for a in iter_bits(allowed):
        for c in iter_bits(allowed & ~adj[a] & _above(a)):
            common = adj[a] & adj[c] & allowed & _above(a)
            for b in iter_bits(common):
                for d in iter_bits(common & ~adj[b] & _above(b)):
                    yield a, b, c, d


def _find_c4_2k1(g: Graph, allowed: int) -> Optional[tuple[int, ...]]:
    adj = g.adj
    for a in iter_bits(allowed):
        for c in iter_bits(allowed & ~adj[a] & _above(a)):
            far_ac = allowed & ~adj[a] & ~adj[c] & ~(1 << a) & ~(1 << c)
            if _nonadjacent_pair(adj, far_ac) is None:
                continue
            common = adj[a] & adj[c] & allowed & _above(a)
            for b in iter_bits(common):
                for d in iter_bits(common & ~adj[b] & _above(b)):
                    rest = far_ac & ~adj[b] & ~adj[d] & ~(1 << b) & ~(1 << d)
                    pair = _nonadjacent_pair(adj, rest)
                    if pair:
                        return (a, b, c, d) + pair
    return None


def _find_c4_k1(g: Graph, allowed: int) -> Optional[tuple[int, ...]]:
    adj = g.adj
    for a, b, c, d in induced_c4s(g, allowed):
        rest = allowed & ~(adj[a] | adj[b] | adj[c] | adj[d]) & ~to_mask((a, b, c, d))
        if rest:
            return (a, b, c, d, (rest & -rest).bit_length() - 1)
    return None


def _find_k4(g: Graph, allowed: int) -> Optional[tuple[int, ...]]:
    adj = g.adj
    for a, b, c in g.triangles():
        if not (allowed >> a & allowed >> b & allowed >> c & 1):
            continue
        common = adj[a] & adj[b] & adj[c] & allowed
        if common:
            return (a, b, c, (common & -common).bit_length() - 1)
    return None


def _find_diamond(g: Graph, allowed: int) -> Optional[tuple[int, ...]]:
    adj = g.adj
    for u in iter_bits(allowed):
        for v in iter_bits(adj[u] & allowed & _above(u)):
            pair = _nonadjacent_pair(adj, adj[u] & adj[v] & allowed)
            if pair:
                return (u, v) + pair
    return None


def _find_claw(g: Graph, allowed: int) -> Optional[tuple[int, ...]]:
    adj = g.adj
    for v in iter_bits(allowed):
        nb = adj[v] & allowed
        for x in iter_bits(nb):
            for y in iter_bits(nb & ~adj[x] & _above(x)):
                z = nb & ~adj[x] & ~adj[y] & _above(y)
                if z:
                    return (v, x, y, (z & -z).bit_length() - 1)
    return None


def _find_prism(g: Graph, allowed: int) -> Optional[tuple[int, ...]]:
    tris = [t for t in g.triangles() if all(allowed >> v & 1 for v in t)]
    for i, s in enumerate(tris):
        for t in tris[i + 1:]:
            if set(s) & set(t):
                continue
            tm = to_mask(t)
            images = []
            for v in s:
                hit = g.adj[v] & tm
                if popcount(hit) != 1:
                    break
                images.append(hit.bit_length() - 1)
            else:
                if len(set(images)) == 3:
                    return tuple(s) + tuple(images)
    return None


def _find_p3(g: Graph, allowed: int) -> Optional[tuple[int, ...]]:
    adj = g.adj
    for mid in iter_bits(allowed):
        pair = _nonadjacent_pair(adj, adj[mid] & allowed)
        if pair:
            return (pair[0], mid, pair[1])
    return None


_FINDERS = {
    Pattern.C4_2K1: _find_c4_2k1,
    Pattern.C4_K1: _find_c4_k1,
    Pattern.K4: _find_k4,
    Pattern.DIAMOND: _find_diamond,
    Pattern.CLAW: _find_claw,
    Pattern.PRISM: _find_prism,
    Pattern.P3: _find_p3,
}


def find_induced(g: Graph, pattern, allowed: Optional[int] = None) -> Optional[Certificate]:
    """An induced copy of a fixed small pattern, or ``None``.

    The certificate lists the vertices in the pattern's canonical order
    (cycles in cycle order first, then isolated vertices); see ``pattern_graph``.
    """
    pattern = Pattern(pattern)
    allowed = g.full_mask if allowed is None else allowed & g.full_mask
    if pattern is Pattern.C4:
        found = next(induced_c4s(g, allowed), None)
    else:
        found = _FINDERS[pattern](g, allowed)
    if found is None:
        return None
    return Certificate(FORBIDDEN_SUBGRAPH, tuple(found), pattern.value)


def find_induced_bruteforce(g: Graph, pattern) -> Optional[tuple[int, ...]]:
    """Exhaustive reference search over all ordered vertex tuples (tiny graphs only)."""
    p = pattern_graph(Pattern(pattern))
    for combo in combinations(range(g.n), p.n):
        for perm in permutations(combo):
            if induces_pattern(g, perm, pattern):
                return perm
    return None


def is_cobridge_free(g: Graph) -> Verdict:
    cert = find_induced(g, Pattern.C4_2K1)
    return YES if cert is None else Verdict(False, cert)


# ---------------------------------------------------------------- orientation

class _ParityDSU:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.parity = [0] * size  # parity relative to parent

    def find(self, x: int) -> tuple[int, int]:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root, acc = x, 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, a: int, b: int, rel: int) -> bool:
        """Impose parity(a) ^ parity(b) == rel.  False on contradiction."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return (pa ^ pb) == rel
        self.parent[ra] = rb
        self.parity[ra] = pa ^ pb ^ rel
        return True


def _pair_relation(g: Graph, s: Triangle, t: Triangle) -> int:
    """0 if the sorted cyclic orders of ``s`` and ``t`` must agree, 1 if they must differ."""
    images = tuple(w for _, w in disjoint_triangle_matching(g, s, t))
    rotations = {t, (t[1], t[2], t[0]), (t[2], t[0], t[1])}
    return 0 if images in rotations else 1


def is_orientable(g: Graph) -> Verdict:
    """Orientation via parity union-find over disjoint triangle pairs.

    The variable of a triangle is 0 for the order (a, b, c) of its sorted
    vertices and 1 for (a, c, b).  A contradiction yields a cycle of triangles
    whose constraints have odd total parity.
    """
    tris = list(g.triangles())
    dsu = _ParityDSU(len(tris))
    forest: list[list[tuple[int, int]]] = [[] for _ in tris]
    for i, j in combinations(range(len(tris)), 2):
        s, t = tris[i], tris[j]
        if set(s) & set(t):
            continue
        try:
            rel = _pair_relation(g, s, t)
        except NotPrismaticWitness as exc:
            raise NotPrismatic(str(exc)) from exc
        if dsu.find(i)[0] != dsu.find(j)[0]:
            dsu.union(i, j, rel)
            forest[i].append((j, rel))
            forest[j].append((i, rel))
        elif not dsu.union(i, j, rel):
            path = _forest_path(forest, i, j)
            cycle = tuple(tris[k] for k in path)
            verts = tuple(sorted(set().union(*cycle)))
            return Verdict(False, Certificate(ODD_PARITY_CYCLE, verts, "odd parity over triangle cycle", cycle))
    assignment = {}
    for i, t in enumerate(tris):
        _, p = dsu.find(i)
        assignment[t] = t if p == 0 else (t[0], t[2], t[1])
    return Verdict(True, value=Orientation(assignment))


def _forest_path(forest, src: int, dst: int) -> list[int]:
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            break
        for y, _ in forest[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])
    return path[::-1]


def orientation_violations(g: Graph, orientation: Orientation) -> list[tuple[Triangle, Triangle]]:
    """Disjoint triangle pairs whose matched cyclic orders disagree, straight from the definition."""
    bad = []
    tris = list(g.triangles())
    if set(orientation.cyclic) != set(tris):
        raise ValueError("orientation does not cover exactly the triangles of g")
    for s, t in combinations(tris, 2):
        if set(s) & set(t):
            continue
        match = dict(disjoint_triangle_matching(g, s, t))
        s1 = s[0]
        s2 = orientation.successor(s, s1)
        if orientation.successor(t, match[s1]) != match[s2]:
            bad.append((s, t))
    return bad


def odd_cycle_is_valid(g: Graph, cert: Certificate) -> bool:
    """Re-check an orientation certificate: consecutive triangles disjoint, parity sum odd."""
    cyc = list(cert.triangles)
    if len(cyc) < 2:
        return False
    total = 0
    for k in range(len(cyc)):
        s, t = cyc[k], cyc[(k + 1) % len(cyc)]
        if set(s) & set(t) or not g.is_clique(s) or not g.is_clique(t):
            return False
        total ^= _pair_relation(g, s, t)
    return total == 1


# ------------------------------------------------------------------- colouring

def three_coloring(g: Graph, max_n: int = 60) -> Optional[Coloring]:
    """An exact 3-colouring by DSATUR-ordered backtracking, or ``None``."""
    if g.n > max_n:
        raise ScaleLimitExceeded(f"three_coloring capped at n={max_n}, got n={g.n}")
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    color = [-1] * n
    # forbidden[v] is a bitmask over the three colours
    forbidden = [0] * n

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if color[v] == -1:
                k = (popcount(forbidden[v]), len(nbrs[v]), -v)
                if key is None or k > key:
                    best, key = v, k
        return best

    def solve(used_colors: int) -> bool:
        v = pick()
        if v == -1:
            return True
        if forbidden[v] == 0b111:
            return False
        for c in range(min(used_colors + 1, 3)):
            if forbidden[v] >> c & 1:
                continue
            color[v] = c
            changed = [w for w in nbrs[v] if color[w] == -1 and not forbidden[w] >> c & 1]
            for w in changed:
                forbidden[w] |= 1 << c
            if solve(max(used_colors, c + 1)):
                return True
            for w in changed:
                forbidden[w] &= ~(1 << c)
            color[v] = -1
        return False

    if not solve(0):
        return None
    return Coloring.from_assignment(color)


def three_coloring_bruteforce(g: Graph) -> Optional[tuple[int, ...]]:
    """Scan all 3^n assignments; reference for tiny graphs."""
    from itertools import product
    edges = g.edges()
    for assignment in product(range(3), repeat=g.n):
        if all(assignment[u] != assignment[v] for u, v in edges):
            return assignment
    return None


# ------------------------------------------------------------ substantiality

def is_k_substantial(g: Graph, k: int) -> Verdict:
    """k-substantial: every vertex set of size < k misses some triangle, i.e. Lambda(G) >= k."""
    if k < 1:
        raise ValueError("k must be positive")
    hs = bounded_hitting_set(g, k - 1)
    if hs is None:
        return YES
    return Verdict(False, Certificate(SUBSTANTIALITY_WITNESS, hs.vertices, f"hitting set of size {hs.size}"))


# ---------------------------------------------------- bicoloured patterns

def find_bicolored_pattern(g: Graph, coloring: Coloring, pattern, colors: Optional[tuple[int, int]] = None) -> Optional[Certificate]:
    """An induced pattern living inside two colour classes.

    For ``P3`` with ``colors=(x, y)`` the two ends are in class ``x`` and the
    middle vertex in class ``y``.  Without ``colors`` every ordered pair of
    classes is tried.
    """
    pattern = Pattern(pattern)
    if pattern not in (Pattern.P3, Pattern.C4, Pattern.C4_K1):
        raise ValueError(f"unsupported bicoloured pattern {pattern}")
    pairs = [colors] if colors is not None else [(x, y) for x in range(3) for y in range(3) if x != y]
    masks = [to_mask(c) for c in coloring.classes]
    for x, y in pairs:
        allowed = masks[x] | masks[y]
        if pattern is Pattern.P3:
            found = None
            for mid in iter_bits(masks[y]):
                ends = g.adj[mid] & masks[x]
                if popcount(ends) >= 2:
                    e = bits_to_tuple(ends)
                    found = (e[0], mid, e[1])
                    break
        else:
            cert = find_induced(g, pattern, allowed)
            found = cert.vertices if cert else None
        if found is not None:
            return Certificate(COLORING_WITNESS, tuple(found), f"{pattern.value} in classes {x},{y}")
    return None
