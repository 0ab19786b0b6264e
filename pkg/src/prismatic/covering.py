"""Minimum clique covers of diamond-free, K4-free graphs.

Every clique has at most three vertices, so a cover is t triangles, m edges
and singletons, of size n - 2t - m.  Minimising it means choosing vertex-disjoint
triangles and then a maximum matching on what is left so that 2t + m is as
large as possible.

:func:`clique_cover` finds a small triangle hitting set S (at most 5).  Every
triangle meets S, so a set of disjoint triangles uses at most one triangle
through each vertex of S, and only those choices need to be tried.  When no such S exists the input, if it is co-bridge-free prismatic,
is an induced subgraph of the Schlafli complement and the exact oracle is
small enough to run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import NotCobridgeFree, NotCoverable, NotPrismatic, OverlappingTriangles, ScaleLimitExceeded
from .graph import Graph, Triangle, induced_subgraph, t_matrix, to_mask
from .hitting import HittingSet, bounded_hitting_set, min_hitting_set_oracle  # noqa: F401
from .matching import Matching, max_matching  # noqa: F401
from .recognition import is_cobridge_free, is_prismatic

HITTING_SET_BRANCH = "hitting-set"
SCHLAFLI_BRANCH = "schlafli-oracle"
DEFAULT_K = 5


@dataclass(frozen=True)
class CliqueCover:
    """Parts are sorted tuples, listed in lexicographic order."""

    parts: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return sum(1 for p in self.parts if len(p) == 3)

    @property
    def m(self) -> int:
        return sum(1 for p in self.parts if len(p) == 2)

    @property
    def r(self) -> int:
        return sum(1 for p in self.parts if len(p) == 1)

    @property
    def size(self) -> int:
        return len(self.parts)

    def stats(self) -> dict:
        return {"t": self.t, "m": self.m, "r": self.r, "size": self.size}

    def problems(self, g: Graph) -> list[str]:
        """Empty when this is a clique cover of ``g``; otherwise what is wrong."""
        out = []
        seen = 0
        for p in self.parts:
            if not 1 <= len(p) <= 3:
                out.append(f"part {p} has size {len(p)}")
            if any(not 0 <= v < g.n for v in p):
                out.append(f"part {p} names a vertex outside the graph")
                continue
            mask = to_mask(p)
            if mask & seen:
                out.append(f"part {p} overlaps an earlier part")
            seen |= mask
            if not g.is_clique(p):
                out.append(f"part {p} is not a clique")
        if seen != g.full_mask:
            out.append("parts do not cover every vertex")
        if 3 * self.t + 2 * self.m + self.r != g.n:
            out.append("n != 3t + 2m + r")
        return out

    def is_valid(self, g: Graph) -> bool:
        return not self.problems(g)


def _canonical(parts: Iterable[Sequence[int]]) -> CliqueCover:
    return CliqueCover(tuple(sorted(tuple(sorted(p)) for p in parts)))


def cover_from_triangles(g: Graph, chosen: Iterable[Triangle]) -> CliqueCover:
    """Chosen triangles, a maximum matching of the rest, then singletons."""
    chosen = [tuple(sorted(t)) for t in chosen]
    used = 0
    for t in chosen:
        if not g.is_clique(t) or len(set(t)) != 3:
            raise ValueError(f"{t} is not a triangle of the graph")
        mask = to_mask(t)
        if mask & used:
            raise OverlappingTriangles(f"triangle {t} shares a vertex with an earlier one")
        used |= mask
    rest = [v for v in range(g.n) if not used >> v & 1]
    sub, index = induced_subgraph(g, rest)
    matching = max_matching(sub)
    paired = set()
    parts: list[tuple[int, ...]] = list(chosen)
    for a, b in matching.edges:
        parts.append((index[a], index[b]))
        paired.update((index[a], index[b]))
    parts.extend((v,) for v in rest if v not in paired)
    return _canonical(parts)


def _ceiling(n: int, t: int) -> int:
    """Largest 2t + m possible with t triangles among n vertices."""
    return 2 * t + (n - 3 * t) // 2


def _best_ceiling(n: int, t_lo: int, t_hi: int) -> int:
    t_hi = min(t_hi, n // 3)
    if t_hi < t_lo:
        return -1
    return max(_ceiling(n, t) for t in range(t_lo, t_hi + 1))


def _residual_value(g: Graph, used: int) -> int:
    rest = [v for v in range(g.n) if not used >> v & 1]
    sub, _ = induced_subgraph(g, rest)
    return max_matching(sub).size


@dataclass
class CoverReport:
    branch: str
    hitting_set: Optional[tuple[int, ...]]
    triangles: tuple[Triangle, ...]
    schlafli: Optional[bool] = None
    elapsed_ms: Optional[float] = None
    leaves: int = 0

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "branch": self.branch,
            "hitting_set": None if self.hitting_set is None else list(self.hitting_set),
            "triangles": [list(t) for t in self.triangles],
            "schlafli": self.schlafli,
            "elapsed_ms": self.elapsed_ms if timing else None,
            "leaves": self.leaves,
        }


@dataclass(frozen=True)
class CoverResult:
    cover: CliqueCover
    report: CoverReport = field(compare=False)


def _enumerate_per_hitter(g: Graph, groups: list[list[Triangle]]) -> tuple[tuple[Triangle, ...], int]:
    """Best choice of at most one triangle from each group; returns (triangles, leaves visited)."""
    n = g.n
    masks = [[to_mask(t) for t in grp] for grp in groups]
    goal = _best_ceiling(n, 0, len(groups))
    best_val = -1
    best: tuple[Triangle, ...] = ()
    leaves = 0
    chosen: list[Triangle] = []

    def dfs(level: int, used: int) -> bool:
        nonlocal best_val, best, leaves
        t = len(chosen)
        if _best_ceiling(n, t, t + len(groups) - level) <= best_val:
            return False
        if level == len(groups):
            leaves += 1
            val = 2 * t + _residual_value(g, used)
            if val > best_val:
                best_val, best = val, tuple(chosen)
            return best_val >= goal
        for tri, mask in zip(groups[level], masks[level]):
            if mask & used:
                continue
            chosen.append(tri)
            done = dfs(level + 1, used | mask)
            chosen.pop()
            if done:
                return True
        return dfs(level + 1, used)

    dfs(0, 0)
    return best, leaves


def clique_cover(g: Graph, verify: bool = False, k: int = DEFAULT_K, run_schlafli: bool = True) -> CoverResult:
    """Minimum clique cover of a co-bridge-free prismatic graph.

    With ``verify`` the preconditions are checked and violations raise
    :class:`NotPrismatic` / :class:`NotCobridgeFree`.  Without it the answer
    is still optimal whenever a hitting set of size at most ``k`` exists.
    """
    from .families.schlafli import is_schlafli_prismatic

    start = time.perf_counter()
    tm = t_matrix(g)
    if verify:
        pv = is_prismatic(g)
        if not pv:
            raise NotPrismatic("input is not prismatic", certificate=pv.certificate)
        cv = is_cobridge_free(g)
        if not cv:
            raise NotCobridgeFree("input contains an induced co-bridge", certificate=cv.certificate)

    hs = bounded_hitting_set(g, k)
    if hs is not None:
        groups = [tm.triangles_through(s) for s in hs.vertices]
        tris, leaves = _enumerate_per_hitter(g, groups)
        cover = cover_from_triangles(g, tris)
        schl = None
        if run_schlafli and g.n <= 27:
            schl = bool(is_schlafli_prismatic(g))
        report = CoverReport(HITTING_SET_BRANCH, hs.vertices, tuple(sorted(tris)), schl, leaves=leaves)
    else:
        schl = is_schlafli_prismatic(g)
        if not schl:
            raise NotCoverable(f"no hitting set of size {k} and the graph is not Schlafli-prismatic")
        cover = min_clique_cover_oracle(g)
        tris = tuple(p for p in cover.parts if len(p) == 3)
        report = CoverReport(SCHLAFLI_BRANCH, None, tris, True)
    report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    return CoverResult(cover, report)


def min_clique_cover_oracle(g: Graph, max_n: int = 30) -> CliqueCover:
    """Exact minimum cover by branch and bound over sets of disjoint triangles.

    The lowest undecided vertex either joins a triangle with two other
    undecided vertices or is left for the matching.  Each set of disjoint
    triangles is reached exactly once; leaves are scored 2t + matching size.
    """
    if g.n > max_n:
        raise ScaleLimitExceeded(f"clique-cover oracle capped at n={max_n}, got n={g.n}")
    t_matrix(g)
    n = g.n
    tri_at = [[] for _ in range(n)]
    for t in g.triangles():
        for v in t:
            tri_at[v].append((tuple(sorted(t)), to_mask(t)))
    goal = _best_ceiling(n, 0, n // 3)
    best_val = max_matching(g).size
    best: tuple[Triangle, ...] = ()
    chosen: list[Triangle] = []

    def dfs(decided: int, used: int) -> bool:
        nonlocal best_val, best
        t = len(chosen)
        open_count = n - bin(decided).count("1")
        if _best_ceiling(n, t, t + open_count // 3) <= best_val:
            return False
        if decided == (1 << n) - 1:
            val = 2 * t + _residual_value(g, used)
            if val > best_val:
                best_val, best = val, tuple(chosen)
            return best_val >= goal
        low = decided + 1 & ~decided
        v = low.bit_length() - 1
        for tri, mask in tri_at[v]:
            if mask & decided:
                continue
            chosen.append(tri)
            done = dfs(decided | mask, used | mask)
            chosen.pop()
            if done:
                return True
        return dfs(decided | low, used)

    if best_val < goal:
        dfs(0, 0)
    return cover_from_triangles(g, best)

