"""Maximum-cardinality matching in general graphs (Edmonds' blossom contraction)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class Matching:
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def is_valid(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if u in seen or v in seen or not g.has_edge(u, v):
                return False
            seen.update((u, v))
        return True


def max_matching(g: Graph) -> Matching:
    """A maximum matching; deterministic for a fixed vertex order.

    Greedy initialisation followed by one augmenting-path search per exposed
    vertex.  Odd cycles met during the alternating BFS are shrunk into their
    base vertex, which keeps the search O(n^3) overall.
    """
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in nbrs[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    for root in range(n):
        if match[root] != -1 or not nbrs[root]:
            continue
        end, parent = _augmenting_path(root, nbrs, match)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt

    edges = tuple((v, match[v]) for v in range(n) if match[v] > v)
    return Matching(edges)


def _augmenting_path(root, nbrs, match):
    n = len(nbrs)
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in nbrs[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                in_tree[match[to]] = True
                queue.append(match[to])
    return -1, parent
