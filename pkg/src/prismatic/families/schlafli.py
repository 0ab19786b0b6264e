"""Membership in the class of induced subgraphs of the Schlafli complement."""

from __future__ import annotations

from collections import deque
from functools import lru_cache

from ..graph import Graph, popcount
from ..recognition import FORBIDDEN_SUBGRAPH, Certificate, Verdict, is_prismatic
from .special import schlafli_complement

TARGET_N = 27
TARGET_DEGREE = 10
TARGET_TRIANGLES_PER_VERTEX = 5
# strongly regular (27, 10, 1, 5)
TARGET_LAMBDA = 1
TARGET_MU = 5


@lru_cache(maxsize=1)
def _target() -> Graph:
    return schlafli_complement()


def _search_order(g: Graph) -> list[int]:
    """BFS order per component, each started from a vertex of largest degree."""
    order: list[int] = []
    seen = [False] * g.n
    for start in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(g.neighbors(v), key=lambda u: (-g.degree(u), u)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _signature_clash(g: Graph):
    """A witness that no induced copy in the target can exist, judged from local counts."""
    tri_count = [0] * g.n
    for t in g.triangles():
        for v in t:
            tri_count[v] += 1
    for v in range(g.n):
        if g.degree(v) > TARGET_DEGREE or tri_count[v] > TARGET_TRIANGLES_PER_VERTEX:
            return (v,), "degree or triangle count exceeds the target's"
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = popcount(g.adj[u] & g.adj[v])
            limit = TARGET_LAMBDA if g.adj[u] >> v & 1 else TARGET_MU
            if common > limit:
                return (u, v), "too many common neighbours"
    return None


def is_schlafli_prismatic(g: Graph) -> Verdict:
    """An induced embedding into the Schlafli complement, or a negative verdict.

    On success ``value`` maps vertex v to its image ``value[v]``.  The target
    is vertex-transitive, so the first vertex searched is pinned to 0.
    """
    if g.n > TARGET_N:
        return Verdict(False, Certificate(FORBIDDEN_SUBGRAPH, (), f"more than {TARGET_N} vertices"))
    if g.n == 0:
        return Verdict(True, value=())
    pv = is_prismatic(g)
    if not pv:
        return Verdict(False, pv.certificate)
    clash = _signature_clash(g)
    if clash is not None:
        return Verdict(False, Certificate(FORBIDDEN_SUBGRAPH, clash[0], clash[1]))

    h = _target()
    full = (1 << TARGET_N) - 1
    h_adj = h.adj
    h_non = [full & ~h_adj[x] & ~(1 << x) for x in range(TARGET_N)]
    order = _search_order(g)
    pos = {v: i for i, v in enumerate(order)}
    # earlier neighbours / non-neighbours of each vertex in search order
    back = [[(u, bool(g.adj[v] >> u & 1)) for u in order[:pos[v]]] for v in order]
    image = [-1] * g.n

    def extend(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        cand = full & ~used
        for u, adjacent in back[i]:
            cand &= h_adj[image[u]] if adjacent else h_non[image[u]]
            if not cand:
                return False
        if i == 0:
            cand &= 1
        while cand:
            low = cand & -cand
            x = low.bit_length() - 1
            image[v] = x
            if extend(i + 1, used | low):
                return True
            cand ^= low
        image[v] = -1
        return False

    if extend(0, 0):
        return Verdict(True, value=tuple(image))
    return Verdict(False, Certificate(FORBIDDEN_SUBGRAPH, tuple(range(g.n)), "no induced embedding exists"))


def embedding_is_valid(g: Graph, image) -> bool:
    h = _target()
    if len(image) != g.n or len(set(image)) != g.n or any(not 0 <= x < TARGET_N for x in image):
        return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != h.has_edge(image[u], image[v]):
                return False
    return True
