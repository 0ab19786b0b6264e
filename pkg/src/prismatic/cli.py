"""Command-line front end.

    prismatic gen <family> [--spec FILE] [--seed N] -o FILE
    prismatic check FILE [--what prismatic|cobridge|orientable|3color|all]
    prismatic hit FILE --k N
    prismatic cover FILE [--verify] [--oracle] [--timing]
    prismatic families selftest [--seed N] [--count C]

Exit codes: 0 ok, 2 negative answer or contract violation, 3 oracle
mismatch, 64 usage error, 74 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .covering import clique_cover, min_clique_cover_oracle
from .edgelist import read_edgelist, write_edgelist
from .errors import EdgeListError, PrismaticError
from .graph import Graph
from .hitting import bounded_hitting_set
from .recognition import is_cobridge_free, is_orientable, is_prismatic, three_coloring

EXIT_OK = 0
EXIT_NO = 2
EXIT_MISMATCH = 3
EXIT_USAGE = 64
EXIT_IO = 74

CHECKS = ("prismatic", "cobridge", "orientable", "3color")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=None, help="seed for every random choice (default 0)")

    p = _Parser(prog="prismatic", description="Prismatic graph tools: generate, check, hit, cover.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", parents=[common], help="emit a family graph as an edge list")
    gen.add_argument("family")
    gen.add_argument("--spec", help="key = value spec file")
    gen.add_argument("-o", "--output", required=True)

    chk = sub.add_parser("check", parents=[common], help="run predicates and print certificates")
    chk.add_argument("input")
    chk.add_argument("--what", choices=CHECKS + ("all",), default="all")

    hit = sub.add_parser("hit", parents=[common], help="bounded triangle hitting set")
    hit.add_argument("input")
    hit.add_argument("--k", type=int, required=True)

    cov = sub.add_parser("cover", parents=[common], help="minimum clique cover")
    cov.add_argument("input")
    cov.add_argument("--verify", action="store_true", help="refuse inputs that are not co-bridge-free prismatic")
    cov.add_argument("--oracle", action="store_true", help="cross-check against the exhaustive oracle")
    cov.add_argument("--timing", action="store_true", help="report elapsed_ms (breaks byte-identical output)")
    cov.add_argument("--oracle-max-n", type=int, default=30)

    fam = sub.add_parser("families", help="family generator utilities")
    fsub = fam.add_subparsers(dest="action", required=True, parser_class=_Parser)
    st = fsub.add_parser("selftest", parents=[common], help="generator + invariant sweep")
    st.add_argument("--count", type=int, default=20)
    return p


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def _seed(args) -> int:
    return 0 if args.seed is None else args.seed


def _load(path: str) -> Graph:
    return read_edgelist(path)


def cmd_gen(args) -> int:
    from .families.registry import FamilySpec, generate, read_spec

    params = read_spec(args.spec) if args.spec else {}
    seed = args.seed if args.seed is not None else int(params.pop("seed", 0))
    params.pop("seed", None)
    params.pop("family", None)
    g = generate(FamilySpec(args.family, params, seed))
    write_edgelist(g, args.output, [f"family: {args.family}", f"seed: {seed}"])
    payload = {"input": args.spec, "subcommand": "gen", "result": {"family": args.family, "n": g.n, "m": g.m,
               "output": args.output}, "seed": seed, "elapsed_ms": None}
    _emit(args, payload, [f"{args.family}: n={g.n} m={g.m} -> {args.output}"])
    return EXIT_OK


def cmd_check(args) -> int:
    g = _load(args.input)
    wanted = CHECKS if args.what == "all" else (args.what,)
    results = {}
    lines = []
    all_yes = True
    for what in wanted:
        if what == "prismatic":
            v = is_prismatic(g)
            ok, cert, extra = v.ok, v.certificate, None
        elif what == "cobridge":
            v = is_cobridge_free(g)
            ok, cert, extra = v.ok, v.certificate, None
        elif what == "orientable":
            pv = is_prismatic(g)
            if not pv:
                ok, cert, extra = False, pv.certificate, "not prismatic"
            else:
                v = is_orientable(g)
                ok, cert, extra = v.ok, v.certificate, None
        else:
            col = three_coloring(g)
            ok, cert = col is not None, None
            extra = [sorted(c) for c in col.classes] if col is not None else None
        all_yes &= ok
        entry = {"ok": ok}
        if cert is not None:
            entry["certificate"] = cert.to_dict()
        if extra is not None:
            entry["detail"] = extra
        results[what] = entry
        line = f"{what}: {'yes' if ok else 'no'}"
        if cert is not None:
            line += f"  certificate {cert.kind} vertices={list(cert.vertices)}"
            if cert.note:
                line += f" ({cert.note})"
        lines.append(line)
    payload = {"input": args.input, "subcommand": "check", "result": results, "seed": _seed(args), "elapsed_ms": None}
    _emit(args, payload, lines)
    return EXIT_OK if all_yes else EXIT_NO


def cmd_hit(args) -> int:
    if args.k < 0:
        raise UsageError("--k must be non-negative")
    g = _load(args.input)
    hs = bounded_hitting_set(g, args.k)
    result = None if hs is None else sorted(hs.vertices)
    payload = {"input": args.input, "subcommand": "hit", "result": result, "k": args.k, "seed": _seed(args),
               "elapsed_ms": None}
    _emit(args, payload, ["no" if hs is None else " ".join(map(str, result))])
    return EXIT_OK if hs is not None else EXIT_NO


def cmd_cover(args) -> int:
    g = _load(args.input)
    res = clique_cover(g, verify=args.verify)
    cover, report = res.cover, res.report
    payload = {
        "input": args.input,
        "subcommand": "cover",
        "result": {"parts": [list(p) for p in cover.parts]},
        "stats": cover.stats(),
        "branch": report.branch,
        "hitting_set": None if report.hitting_set is None else list(report.hitting_set),
        "schlafli": report.schlafli,
        "elapsed_ms": report.elapsed_ms if args.timing else None,
        "seed": _seed(args),
    }
    lines = [f"size {cover.size}  (t={cover.t} m={cover.m} r={cover.r})",
             f"branch {report.branch}" + (f"  hitting set {list(report.hitting_set)}" if report.hitting_set else ""),
             "parts " + " ".join("{" + ",".join(map(str, p)) + "}" for p in cover.parts)]
    if args.timing:
        lines.append(f"elapsed_ms {report.elapsed_ms}")
    code = EXIT_OK
    if args.oracle:
        oracle = min_clique_cover_oracle(g, max_n=args.oracle_max_n)
        agree = oracle.size == cover.size
        payload["oracle"] = {"size": oracle.size, "agrees": agree}
        lines.append(f"oracle size {oracle.size}  {'agrees' if agree else 'MISMATCH'}")
        if not agree:
            code = EXIT_MISMATCH
    _emit(args, payload, lines)
    return code


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    rows = run_selftest(seed=_seed(args), count=args.count)
    failed = sum(r["fail"] for r in rows)
    payload = {"input": None, "subcommand": "families selftest", "result": rows, "seed": _seed(args),
               "elapsed_ms": None}
    width = max(len(r["family"]) for r in rows)
    lines = [f"{'family':<{width}}  count  pass  fail  checks"]
    for r in rows:
        lines.append(f"{r['family']:<{width}}  {r['count']:>5}  {r['pass']:>4}  {r['fail']:>4}  {r['checks']}")
        for msg in r["failures"][:3]:
            lines.append(f"    FAIL {msg}")
    lines.append("PASS" if not failed else f"FAIL ({failed} instances)")
    _emit(args, payload, lines)
    return EXIT_OK if not failed else EXIT_NO


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "check":
            return cmd_check(args)
        if args.command == "hit":
            return cmd_hit(args)
        if args.command == "cover":
            return cmd_cover(args)
        return cmd_selftest(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, EdgeListError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_IO
    except PrismaticError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        cert = getattr(exc, "certificate", None)
        if cert is not None:
            print(f"certificate: {json.dumps(cert.to_dict())}", file=sys.stderr)
        return EXIT_NO


def main() -> None:
    sys.exit(run())
