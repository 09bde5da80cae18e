"""Periodic p-adic digits of a shifted parameter and their normalized limits.

Walks the expansion of -3/11 (that is, a - 1 for a = 8/11) across primes in
the residue class 2 mod 11, showing how the digits, divided by p, converge
to exact rational limits.
"""

from fractions import Fraction

from hgdensity.padic import normalized_digit_limit, padic_digits

A = Fraction(8, 11)


def main():
    print(f"p-adic digits of {A - 1} for primes p = 2 mod 11")
    print(f"{'p':>5}  {'digits (one period)':<34} normalized")
    for p in (13, 79, 101, 167, 211, 233, 277, 409):
        exp = padic_digits(A - 1, p)
        head = exp.digits[:5]
        norm = ", ".join(f"{d / p:.4f}" for d in head)
        print(f"{p:>5}  {str(head):<34} ({norm})")
        assert exp.reconstruct() == A - 1  # expansion is exact
    limits = [normalized_digit_limit(A, 2, j) for j in range(5)]
    print(f"{'inf':>5}  {'':<34} ({', '.join(str(l) for l in limits)})")


if __name__ == "__main__":
    main()
