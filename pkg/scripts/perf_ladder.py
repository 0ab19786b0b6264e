"""Time the hitting set and the clique cover on wide ladders of growing size."""

import argparse
import time

from prismatic import bounded_hitting_set, clique_cover
from prismatic.families import triangle_chain, wide_ladder_spec


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 500, 1000])
    args = ap.parse_args()

    print(f"{'n':>6} {'hit_s':>8} {'cover_s':>8} {'size':>6} {'t':>4} {'m':>5}")
    for n in args.sizes:
        g, _ = triangle_chain(wide_ladder_spec(n))
        start = time.perf_counter()
        hs = bounded_hitting_set(g, 5)
        hit_s = time.perf_counter() - start
        start = time.perf_counter()
        res = clique_cover(g, run_schlafli=False)
        cover_s = time.perf_counter() - start
        assert hs is not None and res.cover.is_valid(g)
        print(f"{g.n:>6} {hit_s:>8.3f} {cover_s:>8.3f} {res.cover.size:>6} {res.cover.t:>4} {res.cover.m:>5}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
