"""Generator and invariant sweep behind ``prismatic families selftest``."""

from __future__ import annotations

from typing import Callable

from .corpus import (Instance, chain_instance, fan_instance, mantled_instance, ring5_instance, schlafli_subgraph,
                     worn_instance)
from .covering import clique_cover
from .errors import SpecInfeasible
from .families.chains import CYCLE, PATH, canonical_coloring, triangle_locations_ok, verify_good_partition
from .families.schlafli import is_schlafli_prismatic
from .hitting import bounded_hitting_set
from .recognition import is_cobridge_free, is_prismatic
from .rng import make_rng


def _check(inst: Instance) -> list[str]:
    g = inst.graph
    bad = []
    pv = is_prismatic(g)
    if not pv:
        bad.append(f"not prismatic: {pv.certificate.to_dict()}")
        return bad
    if inst.partition is not None:
        v = verify_good_partition(g, inst.partition)
        if not v:
            bad.append(f"good partition: {v.certificate.note}")
        if triangle_locations_ok(g, inst.partition) is not None:
            bad.append("triangle outside the allowed positions")
        if inst.partition.kind == PATH and not canonical_coloring(inst.partition).is_proper(g):
            bad.append("canonical colouring not proper")
    if is_cobridge_free(g):
        if bounded_hitting_set(g, 5) is None and not is_schlafli_prismatic(g):
            bad.append("co-bridge-free but neither k=5 hitting set nor Schlafli embedding")
        res = clique_cover(g, run_schlafli=False)
        if not res.cover.is_valid(g):
            bad.append(f"invalid cover: {res.cover.problems(g)}")
    return bad


def run_selftest(seed: int = 0, count: int = 20) -> list[dict]:
    rng = make_rng(seed)
    makers: list[tuple[str, Callable[[], Instance]]] = [
        ("path", lambda: chain_instance(rng, PATH, max_n=6, max_hat=3, max_rung=2, max_extra=2)),
        ("cycle", lambda: chain_instance(rng, CYCLE, max_n=8, max_hat=3, max_rung=2, max_extra=2)),
        ("fan", lambda: fan_instance(rng, 120)),
        ("ring5", lambda: ring5_instance(rng)),
        ("mantled", lambda: mantled_instance(rng)),
        ("worn", lambda: worn_instance(rng)),
        ("schlafli-sub", lambda: schlafli_subgraph(rng)),
    ]
    rows = []
    for family, make in makers:
        row = {"family": family, "count": 0, "pass": 0, "fail": 0, "failures": [],
               "checks": "prismatic, partition, cover" if family in ("path", "cycle", "fan") else "prismatic, cover"}
        while row["count"] < count:
            try:
                inst = make()
            except SpecInfeasible as exc:
                row["count"] += 1
                row["fail"] += 1
                row["failures"].append(f"generator: {exc}")
                continue
            row["count"] += 1
            bad = _check(inst)
            if bad:
                row["fail"] += 1
                row["failures"].append(f"{inst.name}: {bad[0]}")
            else:
                row["pass"] += 1
        rows.append(row)
    return rows
