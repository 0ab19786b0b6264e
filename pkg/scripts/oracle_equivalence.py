"""Compare the cover, hitting set and matching with the package oracles and the independent brute force in tests/oracles.py on the small corpus."""

import argparse
import sys
import time
from pathlib import Path

from prismatic import bounded_hitting_set, clique_cover, max_matching, min_clique_cover_oracle, min_hitting_set_oracle
from prismatic.corpus import small_corpus

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
import oracles  # noqa: E402  independent brute force, needs the test extra


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-n", type=int, default=14)
    args = ap.parse_args()

    start = time.perf_counter()
    bad = 0
    corpus = small_corpus(seed=args.seed, count=args.count, max_n=args.max_n)
    for inst in corpus:
        g = inst.graph
        lam = min_hitting_set_oracle(g).size
        checks = {
            "cover": clique_cover(g).cover.size == min_clique_cover_oracle(g).size,
            "hitting": bounded_hitting_set(g, lam) is not None
            and (lam == 0 or bounded_hitting_set(g, lam - 1) is None),
            "matching": max_matching(g).size == oracles.max_matching_size(g),
            "cover (partition scan)": oracles.min_clique_cover_size(g) == min_clique_cover_oracle(g).size,
        }
        if not all(checks.values()):
            bad += 1
            print("mismatch:", inst.name, [k for k, ok in checks.items() if not ok])
    print(f"{len(corpus)} graphs, {bad} mismatches, {time.perf_counter() - start:.1f} s")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
