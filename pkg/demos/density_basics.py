"""From per-prime boundedness to an exact density of bounded primes.

For a few parameter triples: check individual primes with the digit
criterion, compare with the actual coefficient valuations, then compute
the bounded residue classes and the exact Dirichlet density.
"""

from fractions import Fraction

from hgdensity import (
    bounded_residues,
    coefficient_valuations,
    density,
    digit_bounded,
    normalize_params,
    record,
)
from hgdensity.arith import primes_in_range

TRIPLES = [
    ("1/3", "1/3", "2/3"),
    ("2/3", "2/3", "1/3"),
    ("4/47", "18/47", "46/47"),
    ("1/4", "5/6", "1/2"),
]


def main():
    for a, b, c in TRIPLES:
        params = normalize_params(Fraction(a), Fraction(b), Fraction(c))
        B = bounded_residues(params)
        print(f"2F1({a}, {b}; {c}):  m = {params.m}")
        print(f"  bounded residue classes mod {params.m}: {list(B.members)}")
        print(f"  density of bounded primes: {density(params)}")
        verdicts = []
        for p in primes_in_range(params.m, 60):
            v = digit_bounded(params, p)
            verdicts.append(f"{p}:{v.kind.value[0]}")
        print(f"  digit criterion for small primes: {' '.join(verdicts)}")
        # spot-check one prime against real coefficient valuations
        p = primes_in_range(params.m, 60)[0]
        vals = coefficient_valuations(params, p, 200).valuations
        print(f"  min v_{p} over first 200 coefficients: {min(vals)}")
        print(f"  JSON record: {record(params).to_json()}")
        print()


if __name__ == "__main__":
    main()
