"""Family names, key-value spec files and a single entry point for generation.

A spec file holds one ``key = value`` (or ``key: value``) per line; ``#``
starts a comment.  Sequences are comma-separated integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Union

from ..errors import SpecInfeasible
from ..graph import Graph
from ..rng import make_rng
from .chains import BUILTIN_SPECS, CYCLE, PATH, TriangleChainSpec, triangle_chain, wide_ladder_spec
from .special import (MantledSpec, RingOfFiveSpec, cycle_graph, line_k33, mantled_line_k33, petersen, prism,
                      ring_of_five, schlafli_complement)
from .worn import ColoredGraph, line_k33_colored, random_non_edges, worn_chain_compose

FAMILIES = ("prism", "lk33", "schlafli", "ring5", "mantled", "path", "cycle", "minimal", "ladder", "cycle8",
            "wide-ladder", "worn", "c5", "petersen")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def parse_spec_text(text: str) -> dict:
    out: dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        sep = "=" if "=" in line else ":" if ":" in line else None
        if sep is None:
            raise SpecInfeasible(f"spec line {lineno}: expected 'key = value', got {raw!r}")
        key, value = (s.strip() for s in line.split(sep, 1))
        out[key] = _parse_value(value)
    return out


def _parse_value(value: str):
    if "," in value:
        parts = [p.strip() for p in value.split(",") if p.strip()]
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            return tuple(parts)
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            pass
    return value


def read_spec(path: Union[str, Path]) -> dict:
    return parse_spec_text(Path(path).read_text())


def _tuple(params: dict, key: str, default=()):
    v = params.get(key, default)
    return v if isinstance(v, tuple) else (v,)


def _colored_term(name: str) -> ColoredGraph:
    base, _, how = str(name).partition(":")
    if base != "lk33":
        raise SpecInfeasible(f"unknown worn-chain term {name!r}; use lk33:columns or lk33:rows")
    return line_k33_colored(how or "columns")


def generate(spec: FamilySpec) -> Graph:
    fam, p, seed = spec.family, spec.params, spec.seed
    if fam == "prism":
        return prism()
    if fam == "lk33":
        return line_k33()
    if fam == "schlafli":
        return schlafli_complement()
    if fam == "c5":
        return cycle_graph(5)
    if fam == "petersen":
        return petersen()
    if fam == "ring5":
        sizes = _tuple(p, "sizes", (0,) * 6)
        return ring_of_five(RingOfFiveSpec(sizes, seed, float(p.get("edge_prob", 0.5))))
    if fam == "mantled":
        return mantled_line_k33(MantledSpec(_tuple(p, "upper", (0, 0, 0)), _tuple(p, "lower", (0, 0, 0)), seed,
                                            float(p.get("edge_prob", 0.3)), int(p.get("max_rounds", 200))))
    if fam in ("minimal", "ladder", "cycle8"):
        return triangle_chain(BUILTIN_SPECS[fam])[0]
    if fam == "wide-ladder":
        return triangle_chain(wide_ladder_spec(int(p.get("vertices", 500)), int(p.get("n", 5)), seed))[0]
    if fam in (PATH, CYCLE):
        if "n" not in p:
            raise SpecInfeasible(f"{fam} spec needs at least 'n'")
        cs = TriangleChainSpec(fam, int(p["n"]), _tuple(p, "hats"), _tuple(p, "rungs"), _tuple(p, "extras"),
                               seed, float(p.get("edge_prob", 0.5)))
        return triangle_chain(cs)[0]
    if fam == "worn":
        terms = [_colored_term(t) for t in _tuple(p, "terms", ("lk33:columns", "lk33:rows"))]
        drop = float(p.get("drop_prob", 0.0))
        non_edges = random_non_edges(terms, make_rng(seed), drop) if drop else ()
        return worn_chain_compose(terms, non_edges).graph
    raise SpecInfeasible(f"unknown family {fam!r}; choose from {', '.join(FAMILIES)}")

