"""Recompute the frozen oracle values and cross-check the solver on random graphs.

The oracle is the unpruned exhaustive search in tests/oracles.py.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from oracles import exhaustive_at_most, exhaustive_cr  # noqa: E402

from zipcross.generators import DEFAULT_SEED, random_connected  # noqa: E402
from zipcross.graph import complete_bipartite, complete_graph, petersen_graph  # noqa: E402
from zipcross.planar import crossing_number  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--count", type=int, default=30, help="random graphs to cross-check")
    args = ap.parse_args()

    named = {
        "K4": complete_graph(4),
        "K5": complete_graph(5),
        "K3,3": complete_bipartite(3, 3),
        "K6": complete_graph(6),
        "Petersen": petersen_graph(),
    }
    print(f"{'graph':10} {'oracle':>6} {'solver':>6} {'oracle s':>9} {'solver s':>9}")
    for name, g in named.items():
        t0 = time.perf_counter()
        want = exhaustive_cr(g, 3)
        t1 = time.perf_counter()
        got = crossing_number(g, memo=False).value
        t2 = time.perf_counter()
        print(f"{name:10} {want:>6} {got:>6} {t1 - t0:>9.2f} {t2 - t1:>9.2f}")

    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.count):
        n = rng.randint(5, 7)
        g = random_connected(rng, n, rng.randint(n + 3, 12))
        k = crossing_number(g, memo=False).value
        ok = exhaustive_at_most(g, k) and (k == 0 or not exhaustive_at_most(g, k - 1))
        bad += not ok
    print(f"random cross-check: {args.count - bad}/{args.count} agree (seed {args.seed})")


if __name__ == "__main__":
    main()
