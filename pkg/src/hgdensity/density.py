"""The bounded-residue set B(a,b;c) and its exact Dirichlet density.

For m the lcm of the parameter denominators, B(a,b;c) is the set of units
u mod m whose whole cyclic subgroup satisfies the pointwise fractional-part
condition; the density of bounded primes is |B| / phi(m), an exact fraction.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .arith import HGParams, ResidueSet, euler_phi, is_prime, units_mod
from .errors import HypothesisError, PrimeTooSmall

# cache of (m, A, B, C) -> |B|, with A <= B by the a/b symmetry
_BSIZE_CACHE: dict[tuple[int, int, int, int], int] = {}
# per-modulus unit arrays for the vectorized pointwise-set computation
_UNITS_NP: dict[int, np.ndarray] = {}


def _units_np(m: int) -> np.ndarray:
    arr = _UNITS_NP.get(m)
    if arr is None:
        arr = np.array(units_mod(m), dtype=np.int64)
        _UNITS_NP[m] = arr
    return arr


def pointwise_condition(params: HGParams, v: int) -> bool:
    """Single-element predicate {-vc} <= max({-va}, {-vb}).

    Comparisons are done at the common denominator m as integer least
    residues, which is exact since every parameter denominator divides m.
    """
    m = params.m
    if math.gcd(v, m) != 1:
        raise HypothesisError(f"v={v} is not a unit mod {m}")
    A = int(params.a * m)
    B = int(params.b * m)
    C = int(params.c * m)
    return (-v * C) % m <= max((-v * A) % m, (-v * B) % m)


def _pointwise_members(m: int, A: int, B: int, C: int):
    """Units v mod m with [-vC]_m <= max([-vA]_m, [-vB]_m).

    Returns (passing unit list, membership bool array of size m).
    """
    units = _units_np(m)
    mask = (-units * C) % m <= np.maximum((-units * A) % m, (-units * B) % m)
    passing = units[mask]
    in_s = np.zeros(m, dtype=bool)
    in_s[passing] = True
    return passing.tolist(), in_s


def _closure_members(m: int, S: list[int], in_s) -> list[int]:
    """Units u whose full cyclic subgroup <u> lies inside S."""
    verdict: dict[int, bool] = {}
    out = []
    for u in S:
        known = verdict.get(u)
        if known is not None:
            if known:
                out.append(u)
            continue
        cycle = []
        w = u
        ok = True
        while True:
            if not in_s[w]:
                ok = False
                break
            cycle.append(w)
            w = w * u % m
            if w == u:
                break
        if ok:
            for x in cycle:
                verdict[x] = True
            out.append(u)
        else:
            verdict[u] = False
    return sorted(out)


def bounded_residues(params: HGParams) -> ResidueSet:
    """B(a,b;c): units whose every power satisfies the pointwise condition."""
    m = params.m
    S, in_s = _pointwise_members(
        m, int(params.a * m), int(params.b * m), int(params.c * m)
    )
    return ResidueSet(modulus=m, members=tuple(_closure_members(m, S, in_s)))


def bounded_count(m: int, A: int, B: int, C: int) -> int:
    """|B| for the triple (A/m, B/m; C/m), memoized per residue data."""
    key = (m, A, B, C) if A <= B else (m, B, A, C)
    hit = _BSIZE_CACHE.get(key)
    if hit is not None:
        return hit
    n = len(_closure_members(m, *_pointwise_members(m, A, B, C)))
    _BSIZE_CACHE[key] = n
    return n


def density(params: HGParams) -> Fraction:
    """Exact Dirichlet density of bounded primes: |B(a,b;c)| / phi(m)."""
    m = params.m
    n = bounded_count(m, int(params.a * m), int(params.b * m), int(params.c * m))
    return Fraction(n, euler_phi(m))


def bounded_prime_test(params: HGParams, p: int) -> bool:
    """True iff p (> m, prime) lies in a bounded residue class mod m."""
    m = params.m
    if p <= m:
        raise PrimeTooSmall(f"p={p} must exceed the modulus m={m}")
    if not is_prime(p):
        raise HypothesisError(f"p={p} is not prime")
    return (p % m) in bounded_residues(params)


def is_union_of_cyclic(rs: ResidueSet) -> bool:
    """True iff the set is closed under taking powers of its elements."""
    members = set(rs.members)
    m = rs.modulus
    for u in members:
        w = u * u % m
        while w != u:
            if w not in members:
                return False
            w = w * u % m
    return True


def zero_density_criterion(params: HGParams) -> bool:
    """True iff c is strictly the smallest parameter (equivalent to D = 0)."""
    return params.c < params.a and params.c < params.b


@dataclass(frozen=True)
class DivisorAntichain:
    """A set of divisors of x, none dividing another."""

    x: int
    J: frozenset[int]

    def __post_init__(self):
        J = frozenset(self.J)
        object.__setattr__(self, "J", J)
        for d in J:
            if d < 1 or self.x % d != 0:
                raise ValueError(f"{d} does not divide {self.x}")
        for d in J:
            for e in J:
                if d != e and e % d == 0:
                    raise ValueError(f"not an antichain: {d} divides {e}")


def subgroup_union_size(antichain: DivisorAntichain) -> int:
    """|union of <u_d> for d in J| inside a cyclic group of order x.

    Inclusion-exclusion: the intersection over a subset K is the subgroup
    of order gcd(K).
    """
    J = sorted(antichain.J)
    if not J:
        raise ValueError("antichain must be nonempty")
    total = 0
    for k in range(1, len(J) + 1):
        for K in combinations(J, k):
            total += (-1) ** (k - 1) * math.gcd(*K) if k > 1 else K[0]
    return total


@dataclass(frozen=True)
class DensityRecord:
    """(params, m, B, density): the unit of sweep output."""

    params: HGParams
    m: int
    B: ResidueSet
    density: Fraction

    def to_json(self) -> str:
        return json.dumps(
            {
                "a": str(self.params.a),
                "b": str(self.params.b),
                "c": str(self.params.c),
                "m": self.m,
                "B": list(self.B.members),
                "phi": euler_phi(self.m),
                "density": str(self.density),
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "DensityRecord":
        d = json.loads(text)
        params = HGParams(Fraction(d["a"]), Fraction(d["b"]), Fraction(d["c"]))
        return cls(
            params=params,
            m=d["m"],
            B=ResidueSet(modulus=d["m"], members=tuple(d["B"])),
            density=Fraction(d["density"]),
        )


def record(params: HGParams) -> DensityRecord:
    B = bounded_residues(params)
    return DensityRecord(
        params=params,
        m=params.m,
        B=B,
        density=Fraction(len(B), euler_phi(params.m)),
    )
