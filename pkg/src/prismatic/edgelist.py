"""Plain-text edge lists.

    n m
    u v        (m lines, 0-based)
    # labels
    # 0 X_1/R  (optional label block, one vertex per line)

Lines starting with ``#`` are comments.  Output is canonical: edges sorted, LF endings.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from .errors import EdgeListError, InvalidEdge
from .graph import Graph, build_graph

LABELS_MARKER = "# labels"


def format_edgelist(g: Graph, header_comments: Optional[list[str]] = None) -> str:
    lines = [f"# {c}" for c in header_comments or []]
    edges = g.edges()
    lines.append(f"{g.n} {len(edges)}")
    lines.extend(f"{u} {v}" for u, v in edges)
    if g.labels is not None:
        lines.append(LABELS_MARKER)
        lines.extend(f"# {v} {lab}" for v, lab in enumerate(g.labels))
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    header = None
    edges = []
    labels: dict[int, str] = {}
    in_labels = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if line == LABELS_MARKER:
                in_labels = True
            elif in_labels:
                body = line[1:].strip().split(None, 1)
                if body and body[0].isdigit():
                    labels[int(body[0])] = body[1] if len(body) > 1 else ""
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise EdgeListError(f"line {lineno}: expected integers, got {line!r}") from None
        if len(nums) != 2:
            raise EdgeListError(f"line {lineno}: expected two integers, got {line!r}")
        if header is None:
            header = nums
        else:
            edges.append((nums[0], nums[1]))
    if header is None:
        raise EdgeListError("missing 'n m' header line")
    n, m = header
    if len(edges) != m:
        raise EdgeListError(f"header declares {m} edges, found {len(edges)}")
    label_list = None
    if labels:
        if set(labels) != set(range(n)):
            raise EdgeListError("label block does not cover every vertex")
        label_list = [labels[v] for v in range(n)]
    try:
        return build_graph(n, edges, label_list)
    except InvalidEdge as exc:
        raise EdgeListError(str(exc)) from exc


def read_edgelist(path: Union[str, Path]) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(g: Graph, path: Union[str, Path], header_comments: Optional[list[str]] = None) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(format_edgelist(g, header_comments))
