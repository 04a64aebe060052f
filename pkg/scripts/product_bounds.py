"""Tree-product lower bounds from the minor crossing number versus direct values."""

import argparse

from zipcross.formats import load_graph
from zipcross.graph import cartesian_product
from zipcross.mcr import tree_product_bound
from zipcross.planar import crossing_number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trees", default="P2,P3")
    ap.add_argument("--graphs", default="C3,C4,K4")
    ap.add_argument("--cap", type=float, default=60.0, help="direct solver time limit in seconds")
    args = ap.parse_args()

    print(f"{'tree':>5} {'graph':>5} {'bound':>5} {'direct':>10}")
    for tname in args.trees.split(","):
        for gname in args.graphs.split(","):
            tree, g = load_graph(tname), load_graph(gname)
            bound = tree_product_bound(tree, g)
            res = crossing_number(cartesian_product(tree, g), time_limit=args.cap)
            direct = str(res.value) if res.exact else f"[{res.lower},{res.upper}]"
            print(f"{tname:>5} {gname:>5} {bound:>5} {direct:>10}")


if __name__ == "__main__":
    main()
