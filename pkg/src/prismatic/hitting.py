"""Hitting sets of triangles: bounded FPT search and an exact oracle for Lambda(G)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import OracleDisagreement, ScaleLimitExceeded
from .graph import Graph, iter_bits, to_mask


@dataclass(frozen=True)
class HittingSet:
    vertices: tuple[int, ...]
    k_bound: int

    @property
    def size(self) -> int:
        return len(self.vertices)

    def hits_all(self, g: Graph) -> bool:
        mask = to_mask(self.vertices)
        return all(to_mask(t) & mask for t in g.triangles())


def _greedy_packing(tri_masks: list[int]) -> int:
    used = 0
    count = 0
    for t in tri_masks:
        if not t & used:
            used |= t
            count += 1
    return count


def bounded_hitting_set(g: Graph, k: int) -> Optional[HittingSet]:
    """A set of at most ``k`` vertices meeting every triangle, or ``None``.

    Branches three ways on the vertices of some unhit triangle, so at most 3^k
    leaves.  A greedy packing of pairwise disjoint unhit triangles is a lower
    bound on what is still needed and prunes hopeless branches.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    tris = [to_mask(t) for t in g.triangles()]

    def solve(uncovered: list[int], budget: int) -> Optional[int]:
        if not uncovered:
            return 0
        if budget == 0 or _greedy_packing(uncovered) > budget:
            return None
        first = uncovered[0]
        counts = {v: sum(1 for t in uncovered if t >> v & 1) for v in iter_bits(first)}
        for v in sorted(counts, key=lambda u: (-counts[u], u)):
            bit = 1 << v
            rest = solve([t for t in uncovered if not t & bit], budget - 1)
            if rest is not None:
                return rest | bit
        return None

    found = solve(tris, k)
    if found is None:
        return None
    return HittingSet(tuple(iter_bits(found)), k)


def _scan_minimum(g: Graph) -> tuple[int, ...]:
    """Smallest hitting set by trying every vertex subset in order of size."""
    tris = [to_mask(t) for t in g.triangles()]
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            mask = to_mask(combo)
            if all(t & mask for t in tris):
                return combo
    raise AssertionError("the full vertex set always hits every triangle")


def _deepening_minimum(g: Graph) -> HittingSet:
    k = 0
    while True:
        hs = bounded_hitting_set(g, k)
        if hs is not None:
            return hs
        k += 1


def min_hitting_set_oracle(g: Graph, mode: str = "auto", max_n: int = 30, scan_max_n: int = 15) -> HittingSet:
    """A minimum hitting set.

    ``mode`` is ``"deepening"`` (iterative deepening over the bounded search),
    ``"scan"`` (plain subset enumeration, n <= ``scan_max_n``) or ``"auto"``,
    which runs both when the scan is affordable and insists they agree.
    """
    if mode not in ("auto", "deepening", "scan"):
        raise ValueError(f"unknown mode {mode!r}")
    if g.n > max_n:
        raise ScaleLimitExceeded(f"hitting-set oracle capped at n={max_n}, got n={g.n}")
    if mode == "scan" or (mode == "auto" and g.n <= scan_max_n):
        if g.n > scan_max_n:
            raise ScaleLimitExceeded(f"subset scan capped at n={scan_max_n}, got n={g.n}")
        scanned = _scan_minimum(g)
        if mode == "scan":
            return HittingSet(scanned, len(scanned))
        deep = _deepening_minimum(g)
        if deep.size != len(scanned):
            raise OracleDisagreement(f"subset scan found {len(scanned)}, deepening found {deep.size}")
        return deep
    return _deepening_minimum(g)
