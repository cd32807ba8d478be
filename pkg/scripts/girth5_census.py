"""Run the proof battery over every connected graph with girth >= 5 and
minimum degree >= 2 on up to N vertices, and histogram the (p, f, q)
triples of all minimizing decompositions.

    python scripts/girth5_census.py --n-max 10
"""

import argparse
from collections import Counter

from zeroforce.formats import encode_graph6
from zeroforce.generators import girth_at_least
from zeroforce.graph import min_degree
from zeroforce.proof import all_decompositions, run_battery


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n-max", type=int, default=10)
    args = parser.parse_args()

    shapes = Counter()
    graphs = 0
    for n in range(5, args.n_max + 1):
        for G in girth_at_least(n, 5):
            if min_degree(G) < 2:
                continue
            graphs += 1
            for d in all_decompositions(G):
                shapes[(d.p, d.f, d.q)] += 1
            bad = [r for r in run_battery(G, all_minimizers=True) if not r]
            if bad:
                print("COUNTEREXAMPLE", encode_graph6(G), [r.name for r in bad])

    print(f"{graphs} graphs")
    for (p, f, q), count in sorted(shapes.items()):
        print(f"p={p} f={f} q={q}  slack 2p-2-f={2 * p - 2 - f}  x{count}")


if __name__ == "__main__":
    main()
