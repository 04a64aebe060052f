"""Random zip products: compare cr(zip) with cr(G1) + cr(G2) per zip degree.

At degree <= 3 the two should be equal. At higher degree the zip is only
expected to dominate the sum when both zip vertices carry coherent bundles.
"""

import argparse
import random
from collections import Counter

from zipcross.cuts import find_coherent_bundles
from zipcross.generators import DEFAULT_SEED, random_zip
from zipcross.planar import Memo, crossing_number
from zipcross.zipping import zip_product


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--count", type=int, default=100, help="instances per degree")
    ap.add_argument("--degrees", default="1,2,3,4,5")
    ap.add_argument("--time-limit", type=float, default=30.0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    memo = Memo()
    print(f"{'d':>2} {'n':>4} {'coherent':>8} {'equal':>6} {'above':>6} {'below':>6} {'unknown':>7}")
    for d in (int(x) for x in args.degrees.split(",")):
        tally = Counter()
        for _ in range(args.count):
            spec = random_zip(rng, d, max_n=7, max_extra=10, multi=d >= 4)
            coherent = d <= 3 or bool(find_coherent_bundles(spec.g1, spec.v1) and find_coherent_bundles(spec.g2, spec.v2))
            tally["coherent"] += coherent
            parts = [crossing_number(h, memo=memo, time_limit=args.time_limit) for h in (spec.g1, spec.g2, zip_product(spec))]
            if not all(p.exact for p in parts):
                tally["unknown"] += 1
                continue
            diff = parts[2].value - parts[0].value - parts[1].value
            tally["equal" if diff == 0 else "above" if diff > 0 else "below"] += 1
        print(f"{d:>2} {args.count:>4} {tally['coherent']:>8} {tally['equal']:>6} {tally['above']:>6} {tally['below']:>6} {tally['unknown']:>7}")


if __name__ == "__main__":
    main()
