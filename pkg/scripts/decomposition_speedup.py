"""Time the cut decomposition against the direct solver on chains of zipped K3,3's."""

import argparse
import time

from zipcross.generators import k33_chain
from zipcross.planar import crossing_number
from zipcross.zipping import cr_via_decomposition


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-t", type=int, default=5, help="longest chain")
    ap.add_argument("--cap", type=float, default=60.0, help="direct solver time limit in seconds")
    args = ap.parse_args()

    print(f"{'t':>2} {'n':>3} {'m':>3} {'decomp':>7} {'secs':>6} {'direct':>10} {'secs':>6}")
    for t in range(1, args.max_t + 1):
        g = k33_chain(t)
        t0 = time.perf_counter()
        tree = cr_via_decomposition(g)
        t1 = time.perf_counter()
        res = crossing_number(g, time_limit=args.cap)
        t2 = time.perf_counter()
        direct = str(res.value) if res.exact else f"[{res.lower},{res.upper}]"
        print(f"{t:>2} {g.n:>3} {g.m:>3} {tree.value:>7} {t1 - t0:>6.2f} {direct:>10} {t2 - t1:>6.2f}")


if __name__ == "__main__":
    main()
