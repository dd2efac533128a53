from itertools import product

import pytest
from sympy import GF, Poly, symbols

from pdskit.gf import FiniteField, field_mul, find_irreducible, is_irreducible, paley_pds
from pdskit.pds import paley_params, verify_pds

x = symbols("x")


def sympy_irreducible(coeffs, p):
    return Poly(list(reversed(coeffs)), x, domain=GF(p)).is_irreducible


def oracle_smallest_irreducible(p, degree):
    # smallest by base-p value, top coefficient most significant
    for value in range(p**degree):
        digits = [(value // p**i) % p for i in range(degree)]
        coeffs = tuple(digits) + (1,)
        if sympy_irreducible(coeffs, p):
            return coeffs


@pytest.mark.parametrize("p, degree, expected", [
    (3, 1, (0, 1)),
    (3, 2, (1, 0, 1)),
    (5, 2, (2, 0, 1)),
])
def test_find_irreducible_examples(p, degree, expected):
    assert find_irreducible(p, degree) == expected


@pytest.mark.parametrize("p, degree", [(3, 3), (3, 4), (5, 3), (7, 2), (11, 2), (13, 2), (3, 5)])
def test_find_irreducible_matches_sympy_oracle(p, degree):
    assert find_irreducible(p, degree) == oracle_smallest_irreducible(p, degree)


def test_is_irreducible_matches_sympy():
    for p, d in [(3, 2), (3, 3), (5, 2), (3, 4)]:
        for tail in product(range(p), repeat=d):
            m = tail + (1,)
            assert is_irreducible(m, p) == sympy_irreducible(m, p), m


def test_field_mul_examples():
    F = FiniteField.of_order(9)
    assert F.modulus == (1, 0, 1)
    a = (2, 1)
    assert field_mul(F, a, F.one()) == a
    assert field_mul(F, (0, 1), (0, 1)) == (2, 0)
    assert field_mul(F, a, F.zero()) == (0, 0)
    with pytest.raises(ValueError):
        field_mul(F, (1,), (1, 0))


@pytest.mark.parametrize("q", [5, 7, 9, 25])
def test_field_axioms(q):
    F = FiniteField.of_order(q)
    els = list(F.elements())
    for a, b, c in product(els, repeat=3):
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    # every nonzero element has an inverse
    for a in els[1:]:
        assert any(F.mul(a, b) == F.one() for b in els)


def test_paley13_members():
    D = paley_pds(13)
    assert D.members == {(1,), (3,), (4,), (9,), (10,), (12,)}


def test_paley9_params():
    D = paley_pds(9)
    assert D.group.factors == (3, 3) and len(D) == 4
    assert verify_pds(D).params == paley_params(9)


@pytest.mark.parametrize("q", [7, 8, 11, 15, 1, 21])
def test_paley_pds_rejects(q):
    with pytest.raises(ValueError):
        paley_pds(q)


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29, 37, 41, 49, 81, 121])
def test_paley_pds_properties(q):
    D = paley_pds(q)
    assert len(D) == (q - 1) // 2
    assert D.negated() == D
    r = verify_pds(D)
    assert r.params == paley_params(q) and r.is_regular and not r.is_trivial
