"""Density statistics over all parameter triples up to a height bound.

Computes the exact density histogram at height 12, prints the largest
buckets (the spike at 1/2 is clearly visible), and tabulates the
proportion beta(eps, N) of triples with density <= eps as the height grows.
"""

import sys
from fractions import Fraction

from hgdensity import survey


def main():
    N = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    workers = int(sys.argv[2]) if len(sys.argv) > 2 else 4

    hist = survey.density_histogram(N, workers=workers)
    print(f"height <= {N}: {hist.total} triples, {len(hist.entries)} distinct densities")
    top = sorted(hist.entries.items(), key=lambda t: -t[1])[:10]
    for dens, count in top:
        share = count / hist.total
        print(f"  density {str(dens):<7} count {count:<8} ({share:.1%})")

    print("\nbeta(eps, N) = share of pairwise-distinct triples with density <= eps")
    for eps in (Fraction(0), Fraction(1, 100), Fraction(1, 10), Fraction(1, 2)):
        rows = survey.conjecture_trend(eps, [6, 9, N], workers=workers)
        cells = "  ".join(f"N={n}: {str(v):<9}" for n, v in rows)
        print(f"  eps = {str(eps):<5} {cells}")


if __name__ == "__main__":
    main()
