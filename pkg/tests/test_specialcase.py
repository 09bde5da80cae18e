"""Shape classification of B over primes p = 2*q**r + 1."""

from collections import Counter
from fractions import Fraction

import pytest

from hgdensity.arith import normalize_params
from hgdensity.density import bounded_residues, density
from hgdensity.errors import HypothesisError
from hgdensity.quadratic import legendre, quadratic_residues
from hgdensity.specialcase import (
    classify_b,
    enumerate_b_shapes,
    find_generator,
    max_density_over_params,
    parse_special_prime,
    remark_case_classification,
    shape_members,
    shape_table_json,
    sweep_special,
)

from hgdensity import verify


def params(x, y, z, p):
    return normalize_params(Fraction(x, p), Fraction(y, p), Fraction(z, p))


def test_parse_special_prime():
    sp = parse_special_prime(47)
    assert (sp.p, sp.q, sp.r) == (47, 23, 1)
    sp = parse_special_prime(23)
    assert (sp.p, sp.q, sp.r) == (23, 11, 1)
    assert parse_special_prime(13) is None  # (13-1)/2 = 6
    sp = parse_special_prime(19)  # 19 = 2 * 3^2 + 1
    assert (sp.p, sp.q, sp.r) == (19, 3, 2)
    assert parse_special_prime(29) is None  # 29 = 1 mod 4
    assert parse_special_prime(21) is None  # not prime


def test_enumerate_b_shapes_densities():
    sp = parse_special_prime(23)
    dens = {s.density for s in enumerate_b_shapes(sp)}
    assert dens == {
        Fraction(0),
        Fraction(1, 2),
        Fraction(1, 22),
        Fraction(1),
        Fraction(1, 11),
        Fraction(6, 11),
    }
    sp = parse_special_prime(47)
    dens = {s.density for s in enumerate_b_shapes(sp)}
    assert dens == {
        Fraction(0),
        Fraction(1, 2),
        Fraction(1, 46),
        Fraction(1),
        Fraction(1, 23),
        Fraction(12, 23),
    }
    # UNION(0, k) is always larger than the 1/q bound
    for p in (19, 23, 47):
        sp = parse_special_prime(p)
        for s in enumerate_b_shapes(sp):
            if s.kind == "UNION" and s.j == 0:
                assert s.density > Fraction(1, sp.q)


def test_shape_members_are_subgroup_unions():
    sp = parse_special_prime(19)  # r = 2 exercises all shape kinds
    seen = set()
    for s in enumerate_b_shapes(sp):
        members = shape_members(sp, s)
        assert members not in seen  # all shapes are distinct sets
        seen.add(members)
        assert len(members) == s.density * (sp.p - 1)
        for u in members:  # closed under powers (union of cyclic subgroups)
            w = u * u % sp.p
            while w != u:
                assert w in members
                w = w * u % sp.p


def test_classify_b_examples():
    shape = classify_b(params(4, 18, 46, 47))
    assert shape.label() == "HALF(0)"
    assert shape.density == Fraction(1, 2)
    assert set(bounded_residues(params(4, 18, 46, 47)).members) == set(
        quadratic_residues(47)
    )
    assert classify_b(params(22, 21, 2, 23)).label() == "EMPTY"
    with pytest.raises(HypothesisError):
        classify_b(normalize_params(Fraction(1, 13), Fraction(2, 13), Fraction(3, 13)))


def test_sweep_matches_brute_force_at_23():
    p = 23
    sp = parse_special_prime(p)
    res = sweep_special(sp)
    brute = Counter()
    best = (Fraction(0), None)
    for X, Y, Z in verify.params_with_modulus(p):
        shape = classify_b(params(X, Y, Z, p))
        brute[shape.label()] += 1
        cand = (min(X, Y), max(X, Y), Z)
        if shape.density > best[0] or (shape.density == best[0] and cand < best[1]):
            best = (shape.density, cand)
    assert res.shape_counts == dict(brute)
    assert res.total == sum(brute.values()) == (p - 2) * (p - 2) * (p - 1)
    assert (res.max_density, res.witness) == best


def test_max_density_values():
    sp = parse_special_prime(23)
    d, witness = max_density_over_params(sp)
    assert d == Fraction(6, 11)  # UNION(0,1): (q+1)/(2q)
    assert density(params(*witness, 23)) == d
    sp = parse_special_prime(59)
    d, _ = max_density_over_params(sp)
    assert d <= Fraction(1, 29)


def test_nonresidue_z_excludes_large_shapes():
    # when -z is a nonresidue, B cannot contain the quadratic-residue
    # generator, ruling out HALF(0), FULL(0) and UNION(0, k)
    p = 23
    for X, Y, Z in verify.params_with_modulus(p):
        if legendre(-Z, p) != -1:
            continue
        label = classify_b(params(X, Y, Z, p)).label()
        assert label not in {"HALF(0)", "FULL(0)", "UNION(0,1)"}, (X, Y, Z)


def test_remark_case_classification():
    assert remark_case_classification(params(2, 3, 22, 23)) == "c-largest"
    assert density(params(2, 3, 22, 23)) in {Fraction(1, 22), Fraction(1, 2)}
    assert remark_case_classification(params(22, 21, 2, 23)) == "zero"
    with pytest.raises(HypothesisError):
        remark_case_classification(
            normalize_params(Fraction(1, 19), Fraction(2, 19), Fraction(3, 19))
        )  # r = 2, outside the r = 1 remark


def test_remark_cases_exhaustive_at_23():
    # no triple violates its case's density set, and D = 1 never occurs
    for X, Y, Z in verify.params_with_modulus(23):
        remark_case_classification(params(X, Y, Z, 23))  # raises on violation


def test_find_generator():
    for p in (7, 11, 23, 47, 107):
        g = find_generator(p)
        assert len({pow(g, k, p) for k in range(p - 1)}) == p - 1


def test_shape_table_json():
    rows = shape_table_json(parse_special_prime(23))
    assert {"shape": "HALF(0)", "density": "1/2"} in rows
    assert {"shape": "UNION(0,1)", "density": "6/11"} in rows
    assert len(rows) == 6
