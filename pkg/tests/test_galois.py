"""Field table construction, unit classification, and exponent orbits.

Expected moduli and generators are recomputed here by independent brute
force (product enumeration for irreducibility, repeated multiplication for
element orders) before being compared with the table builder.
"""

import itertools
from math import gcd

import pytest

from nearvec.errors import BoundExceededError, NearVecError
from nearvec.galois import (
    GFElement,
    gf_build,
    is_prime,
    same_addition_exponents,
    unit_classification,
)


# -- independent oracles ----------------------------------------------------


def poly_mul_mod_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def oracle_first_irreducible(p, n):
    """Scan monic degree-n polys in lex coefficient order; call one
    reducible when it equals some product of two lower-degree monics."""
    products = set()
    for d1 in range(1, n):
        d2 = n - d1
        if d2 < d1:
            continue
        for low1 in itertools.product(range(p), repeat=d1):
            f = low1 + (1,)
            for low2 in itertools.product(range(p), repeat=d2):
                g = low2 + (1,)
                products.add(poly_mul_mod_p(f, g, p))
    for low in itertools.product(range(p), repeat=n):
        cand = low + (1,)
        if cand not in products:
            return cand
    raise AssertionError("no irreducible found")


def oracle_element_order(table, x):
    k, acc = 1, x
    while acc != table.one:
        acc = table.mul(acc, x)
        k += 1
    return k


def oracle_orbit_count(p, n):
    """Independent recount of the exponent classes: plain integer orbits."""
    m = p**n - 1
    units = [a for a in range(1, m) if gcd(a, m) == 1]
    seen, count = set(), 0
    for u in units:
        if u in seen:
            continue
        count += 1
        x = u
        while x not in seen:
            seen.add(x)
            x = x * (p % m) % m
    return count


# -- construction -----------------------------------------------------------


@pytest.mark.parametrize(
    "p,n",
    [(2, 2), (3, 2), (2, 3), (5, 2), (2, 4), (3, 3)],
)
def test_modulus_matches_independent_scan(p, n):
    assert gf_build(p, n).modulus == oracle_first_irreducible(p, n)


def test_modulus_examples():
    assert gf_build(5, 1).modulus == (0, 1)
    assert gf_build(2, 2).modulus == (1, 1, 1)
    assert gf_build(3, 2).modulus == (1, 0, 1)


def test_generator_examples():
    t5 = gf_build(5, 1)
    assert t5.generator == t5.from_int(2)
    t9 = gf_build(3, 2)
    assert t9.generator == t9.element((1, 1))
    for t in (t5, t9, gf_build(2, 3)):
        assert oracle_element_order(t, t.generator) == t.order - 1


def test_build_rejects_bad_input():
    with pytest.raises(NearVecError):
        gf_build(4, 1)
    with pytest.raises(NearVecError):
        gf_build(2, 0)
    with pytest.raises(BoundExceededError):
        gf_build(2, 17)
    gf_build(2, 5, max_order=32)
    with pytest.raises(BoundExceededError):
        gf_build(2, 6, max_order=32)


@pytest.mark.parametrize("p,n", [(2, 1), (5, 1), (2, 2), (3, 2), (2, 3), (13, 1)])
def test_log_antilog_roundtrip(p, n):
    t = gf_build(p, n)
    for x in t.elements[1:]:
        assert t.antilog[t.log[x]] == x
    assert t.log[t.generator] == 1 or t.order == 2


def test_mul_examples():
    t5 = gf_build(5, 1)
    assert t5.mul(t5.from_int(2), t5.from_int(3)) == t5.one
    t4 = gf_build(2, 2)
    x = t4.element((0, 1))
    assert t4.mul(x, x) == t4.element((1, 1))
    for t in (t4, t5):
        for a in t.elements:
            assert t.mul(a, t.one) == a


def test_pow_examples_and_edge_cases():
    t5 = gf_build(5, 1)
    assert t5.pow(t5.from_int(2), 3) == t5.from_int(3)
    t7 = gf_build(7, 1)
    assert t7.pow(t7.from_int(2), 5) == t7.from_int(4)
    for t in (t5, t7):
        for a in t.elements:
            if not a.is_zero:
                assert t.pow(a, 1) == a
                assert t.pow(a, t.order - 1) == t.one
        assert t.pow(t.zero, 2) == t.zero
        with pytest.raises(ZeroDivisionError):
            t.pow(t.zero, 0)
        with pytest.raises(ZeroDivisionError):
            t.pow(t.zero, -1)


def test_pow_negative_exponent_inverts():
    t7 = gf_build(7, 1)
    three = t7.from_int(3)
    assert t7.mul(t7.pow(three, -1), three) == t7.one
    assert t7.inv(three) == t7.from_int(5)


def test_element_validation():
    t4 = gf_build(2, 2)
    with pytest.raises(NearVecError):
        t4.element((1,))
    with pytest.raises(NearVecError):
        t4.element((2, 0))
    with pytest.raises(NearVecError):
        t4.check(GFElement((1, 0, 0)))


# -- unit classification ----------------------------------------------------


def test_classification_examples():
    uc = unit_classification(2, 2)
    assert uc.modulus_m == 3 and uc.units == (1, 2) and uc.count == 1
    uc = unit_classification(5, 1)
    assert uc.units == (1, 3) and uc.classes == ((1,), (3,))
    uc = unit_classification(2, 3)
    assert uc.classes == ((1, 2, 4), (3, 5, 6))


@pytest.mark.parametrize(
    "p,n", [(2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (13, 1), (2, 4), (5, 2), (3, 3)]
)
def test_classification_invariants(p, n):
    uc = unit_classification(p, n)
    m = uc.modulus_m
    flat = [x for c in uc.classes for x in c]
    assert sorted(flat) == list(uc.units)
    assert len(flat) == len(set(flat))
    for c in uc.classes:
        for x in c:
            assert x * (p % m) % m in c
    assert uc.count == oracle_orbit_count(p, n)
    assert sum(len(c) for c in uc.classes) == len(uc.units)


def test_classification_rejects_small_or_composite():
    with pytest.raises(NearVecError):
        unit_classification(2, 1)
    with pytest.raises(NearVecError):
        unit_classification(6, 1)


# -- same-addition exponents ------------------------------------------------


def test_same_addition_exponent_examples():
    assert not same_addition_exponents(1, 3, 5, 1)
    assert same_addition_exponents(3, 3, 5, 1)
    assert same_addition_exponents(3, 6, 2, 3)


def test_same_addition_rejects_non_units():
    with pytest.raises(NearVecError):
        same_addition_exponents(2, 1, 5, 1)


@pytest.mark.parametrize("p,n", [(3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (13, 1), (2, 4), (5, 2), (2, 5), (3, 3), (2, 6), (7, 2)])
def test_same_addition_is_equivalence(p, n):
    m = p**n - 1
    units = [a for a in range(1, m) if gcd(a, m) == 1]
    rel = {
        (a, b): same_addition_exponents(a, b, p, n) for a in units for b in units
    }
    for a in units:
        assert rel[(a, a)]
        for b in units:
            assert rel[(a, b)] == rel[(b, a)]
            for c in units:
                if rel[(a, b)] and rel[(b, c)]:
                    assert rel[(a, c)]


def test_is_prime():
    assert [x for x in range(2, 20) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19]
