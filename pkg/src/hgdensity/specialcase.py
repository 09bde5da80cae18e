"""Density analysis for primes p = 2*q**r + 1 with q an odd prime.

For such p the unit group mod p is cyclic of order 2*q**r, its subgroup
lattice is a small ladder, and B(x/p, y/p; z/p) can only be one of a short
list of shapes with explicitly known densities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import HGParams, is_prime
from .density import bounded_residues
from .errors import CaseViolation, HypothesisError, ShapeMismatch


@dataclass(frozen=True)
class SpecialPrime:
    """A prime p = 2*q**r + 1 with q an odd prime; p = 3 mod 4 and p > 3."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        assert self.p == 2 * self.q**self.r + 1
        assert self.p % 4 == 3 and self.p > 3


def parse_special_prime(p: int) -> SpecialPrime | None:
    """Recognize p = 2*q**r + 1; None when p is not of this form."""
    if p < 5 or not is_prime(p):
        return None
    n = (p - 1) // 2
    if n % 2 == 0 or n < 3:
        return None
    # n must be a power of a single odd prime
    q = 3
    while q * q <= n:
        if n % q == 0:
            break
        q += 2
    else:
        return SpecialPrime(p=p, q=n, r=1)  # n itself prime
    r = 0
    while n % q == 0:
        n //= q
        r += 1
    if n != 1:
        return None
    return SpecialPrime(p=p, q=q, r=r)


@dataclass(frozen=True)
class BShape:
    """One of the possible forms of B over a special prime.

    EMPTY; HALF(j) = <u^(q^j)> of density 1/(2 q^j); FULL(k) = <-u^(q^k)> of
    density 1/q^k; UNION(j, k) with j < k, of density (q^(k-j)+1)/(2 q^k).
    Here u generates the quadratic residues.
    """

    kind: str
    j: int | None
    k: int | None
    density: Fraction

    def label(self) -> str:
        if self.kind == "EMPTY":
            return "EMPTY"
        if self.kind == "HALF":
            return f"HALF({self.j})"
        if self.kind == "FULL":
            return f"FULL({self.k})"
        return f"UNION({self.j},{self.k})"


def _shape(sp: SpecialPrime, j: int | None, k: int | None) -> BShape:
    q = sp.q
    if j is None and k is None:
        return BShape("EMPTY", None, None, Fraction(0))
    if k is None:
        return BShape("HALF", j, None, Fraction(1, 2 * q**j))
    if j == k:
        return BShape("FULL", None, k, Fraction(1, q**k))
    assert j is not None and j < k, f"impossible shape j={j}, k={k}"
    return BShape("UNION", j, k, Fraction(q ** (k - j) + 1, 2 * q**k))


def enumerate_b_shapes(sp: SpecialPrime) -> list[BShape]:
    """The complete table of possible B-shapes and densities."""
    out = [_shape(sp, None, None)]
    out += [_shape(sp, j, None) for j in range(sp.r + 1)]
    out += [_shape(sp, k, k) for k in range(sp.r + 1)]
    out += [
        _shape(sp, j, k)
        for j in range(sp.r + 1)
        for k in range(j + 1, sp.r + 1)
    ]
    return out


def find_generator(p: int) -> int:
    """Smallest primitive root mod p."""
    order = p - 1
    prime_divs = []
    n = order
    d = 2
    while d * d <= n:
        if n % d == 0:
            prime_divs.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        prime_divs.append(n)
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in prime_divs):
            return g
    raise RuntimeError(f"no generator found mod {p}")


def _qr_generator(sp: SpecialPrime) -> int:
    """An element of order q^r, generating the quadratic residues."""
    g = find_generator(sp.p)
    return g * g % sp.p


def shape_members(sp: SpecialPrime, shape: BShape) -> frozenset[int]:
    """The explicit subset of (Z/pZ)^x described by a shape."""
    p, q = sp.p, sp.q
    u = _qr_generator(sp)

    def cyc(gen):
        out = set()
        w = gen
        while w not in out:
            out.add(w)
            w = w * gen % p
        return out

    if shape.kind == "EMPTY":
        return frozenset()
    if shape.kind == "HALF":
        return frozenset(cyc(pow(u, q**shape.j, p)))
    if shape.kind == "FULL":
        return frozenset(cyc(p - pow(u, q**shape.k, p)))
    return frozenset(
        cyc(pow(u, q**shape.j, p)) | cyc(p - pow(u, q**shape.k, p))
    )


def classify_b(params: HGParams) -> BShape:
    """Match the computed B(a,b;c) against the enumerated shapes.

    Raises ShapeMismatch when B matches no shape; that would contradict the
    subgroup classification and must be surfaced loudly.
    """
    sp = parse_special_prime(params.m)
    if sp is None:
        raise HypothesisError(f"modulus {params.m} is not of the form 2*q^r + 1")
    B = frozenset(bounded_residues(params).members)
    for shape in enumerate_b_shapes(sp):
        if B == shape_members(sp, shape):
            return shape
    raise ShapeMismatch(f"B={sorted(B)} over p={sp.p} matches no enumerated shape")


@dataclass
class SweepResult:
    """Aggregate of an exhaustive (x, y; z) sweep over one special prime."""

    sp: SpecialPrime
    shape_counts: dict[str, int]  # shape label -> number of ordered triples
    max_density: Fraction
    witness: tuple[int, int, int]  # lexicographically least (x, y, z) attaining it
    total: int


def _subgroup_chain(sp: SpecialPrime):
    """QR-part subgroups A_j = <u^(q^j)>, j = r..0, with their new elements.

    Returns (levels, minus_one) where levels[i] = (j, new_elements) lists the
    elements A_j \\ A_{j+1} going down from A_r = {1} to A_0 = Q.
    """
    p, q, r = sp.p, sp.q, sp.r
    u = _qr_generator(sp)
    sets = {}
    for j in range(r + 1):
        gen = pow(u, q**j, p)
        members = set()
        w = gen
        while w not in members:
            members.add(w)
            w = w * gen % p
        sets[j] = members
    levels = []
    prev: set[int] = set()
    for j in range(r, -1, -1):
        new = sorted(sets[j] - prev)
        levels.append((j, new))
        prev = sets[j]
    return levels


def sweep_special(sp: SpecialPrime) -> SweepResult:
    """Classify B for every triple (x/p, y/p; z/p) over a special prime.

    Work is factored through the coset condition: the pointwise set for
    (x, y; z) is determined by s = x/z and t = y/z mod p, and membership of
    u in B reduces to z<u> being contained in the cached set
    T(s, t) = {w : [-w]_p <= max([-ws]_p, [-wt]_p)}.  The x <-> y symmetry
    halves the (s, t) space.
    """
    p, q, r = sp.p, sp.q, sp.r
    levels = _subgroup_chain(sp)
    w_arr = np.arange(1, p, dtype=np.int64)
    neg_w = p - w_arr
    shape_counts: dict[str, int] = {}
    best: tuple[Fraction, tuple[int, int, int]] | None = None
    total = 0
    for s in range(2, p):
        ws = (-w_arr * s) % p
        for t in range(s, p):
            T = np.zeros(p, dtype=bool)
            T[1:] = neg_w <= np.maximum(ws, (-w_arr * t) % p)
            # descend the chain: jlevel[z] = least j with z * A_j inside T
            jlevel = {}
            alive = [z for z in range(1, p) if T[z]]
            for j, new in levels:
                survivors = []
                for z in alive:
                    if all(T[z * h % p] for h in new):
                        jlevel[z] = j
                        survivors.append(z)
                alive = survivors
            # k-level from the reflection z -> p - z
            weight = 2 if s != t else 1
            for z, jstar in jlevel.items():
                kstar = None
                jneg = jlevel.get(p - z)
                if jneg is not None:
                    kstar = max(jstar, jneg)
                    # C_k = A_k u (-A_k): z*C_k in T iff both z and p-z reach level k
                    if kstar < jstar:
                        raise ShapeMismatch(
                            f"non-down-closed family at p={p}, s={s}, t={t}, z={z}"
                        )
                shape = _shape(sp, jstar, kstar)
                label = shape.label()
                shape_counts[label] = shape_counts.get(label, 0) + weight
                total += weight
                x, y = s * z % p, t * z % p
                cand = (min(x, y), max(x, y), z)
                if best is None or shape.density > best[0] or (
                    shape.density == best[0] and cand < best[1]
                ):
                    best = (shape.density, cand)
            n_empty = (p - 1) - len(jlevel)
            if n_empty:
                shape_counts["EMPTY"] = shape_counts.get("EMPTY", 0) + n_empty * weight
                total += n_empty * weight
    assert best is not None
    expected = (p - 2) * (p - 2) * (p - 1)
    assert total == expected, f"swept {total} triples, expected {expected}"
    return SweepResult(
        sp=sp,
        shape_counts=shape_counts,
        max_density=best[0],
        witness=best[1],
        total=total,
    )


def max_density_over_params(sp: SpecialPrime) -> tuple[Fraction, tuple[int, int, int]]:
    """Maximum density over all (x/p, y/p; z/p) with the lex-least witness."""
    res = sweep_special(sp)
    return res.max_density, res.witness


def remark_case_classification(params: HGParams) -> str:
    """Case pattern for p = 2q + 1 (r = 1): returns one of
    'zero', 'c-largest', 'c-between' after checking the computed density
    against the allowed two-element density set for the case."""
    sp = parse_special_prime(params.m)
    if sp is None or sp.r != 1:
        raise HypothesisError(f"modulus {params.m} is not of the form 2*q + 1")
    q = sp.q
    from .density import density as _density

    D = _density(params)
    if D == 1:
        raise CaseViolation(f"D = 1 occurred at {params}")
    a, b, c = params.a, params.b, params.c
    if c < a and c < b:
        tag, allowed = "zero", {Fraction(0)}
    elif a < c and b < c:
        tag, allowed = "c-largest", {Fraction(1, 2 * q), Fraction(1, 2)}
    else:
        tag, allowed = "c-between", {Fraction(1, q), Fraction(q + 1, 2 * q)}
    if D not in allowed:
        raise CaseViolation(
            f"density {D} of {params} contradicts case {tag} (allowed {allowed})"
        )
    return tag


def shape_table_json(sp: SpecialPrime) -> list[dict]:
    """JSON-friendly rows of the shape/density table."""
    return [
        {"shape": s.label(), "density": str(s.density)}
        for s in enumerate_b_shapes(sp)
    ]
