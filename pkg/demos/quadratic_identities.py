"""Class numbers, the sets U_p(x) and W_p(x), and interval identities.

Shows the quadratic-residue machinery on small primes: the Dirichlet
character-sum class number, the interval decomposition of U_p(-x), sums
of Legendre symbols over those intervals, and the W-set intersections
that control densities for special primes.
"""

from hgdensity.quadratic import (
    class_number,
    interval_integer_points,
    least_nonresidue,
    legendre_interval_sum,
    u_interval_decomposition,
    u_set,
    w_intersection_nonempty,
    w_set,
)


def main():
    for p in (7, 11, 23, 47):
        h = class_number(p).h
        print(f"p = {p}: class number h = {h}, least nonresidue = {least_nonresidue(p)}")

    print("\nU_11(2) =", list(u_set(2, 11).members))
    ivs = u_interval_decomposition(2, 11)
    print("U_11(-2) as intervals:", [(str(lo), str(hi)) for lo, hi in ivs])
    print("their integer points:", interval_integer_points(ivs))
    print("matches U_11(9):", interval_integer_points(ivs) == list(u_set(9, 11).members))

    print("\nLegendre interval sums (x, p) -> value:")
    for p, x in ((11, 1), (7, 1), (23, 3)):
        print(f"  ({x}, {p}) -> {legendre_interval_sum(x, p)}")

    print("\nW-set intersections:")
    print("  W_11(2) =", list(w_set(2, 11).members), " W_11(6) =", list(w_set(6, 11).members))
    print("  intersection nonempty:", w_intersection_nonempty(2, 6, 11))
    print("  W_47(29) =", list(w_set(29, 47).members), " W_47(43) =", list(w_set(43, 47).members))
    print("  intersection nonempty:", w_intersection_nonempty(29, 43, 47))
    print("  at p = 19 every pair intersects, e.g.", w_intersection_nonempty(2, 3, 19))


if __name__ == "__main__":
    main()
