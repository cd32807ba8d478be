"""Tabulate the tightest pair (p, f) of the rational inequality for each p.

    python scripts/lemma2_margins.py --p-max 40
"""

import argparse
from math import comb

from zeroforce.bounds import lemma2_holds


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--p-min", type=int, default=5)
    parser.add_argument("--p-max", type=int, default=16)
    args = parser.parse_args()

    print(f"{'p':>3} {'pairs':>6} {'tight f':>8} {'lhs / rhs':>12}")
    for p in range(args.p_min, args.p_max + 1):
        ratios = []
        for f in range(2 * p - 1, comb(p, 2) + 1):
            ok, lhs = lemma2_holds(p, f)
            assert ok, (p, f)
            ratios.append((lhs / (f - p + 1), f))
        ratio, f = min(ratios)
        print(f"{p:>3} {len(ratios):>6} {f:>8} {float(ratio):>12.6f}")


if __name__ == "__main__":
    main()
