#!/usr/bin/env python3
"""
Algebraic laws of superpolynomials, checked against a dense brute-force multiplier
"""

import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), 'app'))

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from algebra.fields import Field
from algebra.grassmann import (Ambient, Parity, SuperPolynomial, Term, grassmann_components,
                               homogeneous_split, mask_from_indices, mask_indices, odd_mul, parity_of,
                               reassemble, spoly_add, spoly_mul)
from errors import AmbientMismatch

QQ_FIELD = Field(0)
AMBIENT = Ambient(QQ_FIELD, ("x", "y", "z"), ("t1", "t2", "t3", "t4"))

exponents = st.tuples(*(st.integers(0, 2) for _ in range(3))).filter(lambda e: sum(e) <= 3)
terms = st.builds(Term, st.integers(-5, 5), exponents, st.integers(0, 15))
superpolys = st.lists(terms, max_size=4).map(lambda ts: SuperPolynomial.from_terms(AMBIENT, ts))
homogeneous = superpolys.flatmap(lambda f: st.sampled_from(f.homogeneous_split()))


def dense(f):
    """Brute-force form: {(even exponents, odd index tuple): Fraction}."""
    out = {}
    for c, exps, mask in f.terms():
        out[(exps, mask_indices(mask))] = QQ_FIELD.to_fraction(c)
    return out


def sort_with_sign(indices):
    """Bubble-sort odd indices, one sign flip per swap; None on a repeated index."""
    word = list(indices)
    if len(set(word)) < len(word):
        return None
    sign = 1
    for i in range(len(word)):
        for j in range(len(word) - 1 - i):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                sign = -sign
    return sign, tuple(word)


def dense_mul(a, b):
    out = {}
    for (ea, oa), ca in a.items():
        for (eb, ob), cb in b.items():
            ordered = sort_with_sign(oa + ob)
            if ordered is None:
                continue
            sign, word = ordered
            key = (tuple(i + j for i, j in zip(ea, eb)), word)
            out[key] = out.get(key, Fraction(0)) + sign * ca * cb
    return {k: v for k, v in out.items() if v}


def test_odd_mul_signs():
    assert odd_mul(mask_from_indices([2]), mask_from_indices([1])) == (-1, 0b11)
    assert odd_mul(mask_from_indices([1]), mask_from_indices([2])) == (1, 0b11)
    assert odd_mul(mask_from_indices([1, 3]), mask_from_indices([2])) == (-1, 0b111)
    assert odd_mul(0b1, 0b1) is None


def test_theta_squares_vanish():
    for i in range(1, AMBIENT.d + 1):
        theta = SuperPolynomial.odd_variable(AMBIENT, i)
        assert (theta * theta).is_zero


def test_parity_and_split():
    x = SuperPolynomial.even_variable(AMBIENT, 0)
    t1 = SuperPolynomial.odd_variable(AMBIENT, 1)
    t2 = SuperPolynomial.odd_variable(AMBIENT, 2)
    assert (x * t1 * t2).parity() is Parity.EVEN
    assert (x * t1).parity() is Parity.ODD
    mixed = x + t1
    assert mixed.parity() is Parity.MIXED
    even, odd = mixed.homogeneous_split()
    assert even == x and odd == t1
    assert (x * t1 * t2 + t1).degree() == 3


def test_vector_encoding():
    t2 = SuperPolynomial.odd_variable(AMBIENT, 2)
    f = t2 * SuperPolynomial.even_variable(AMBIENT, 1) + 3
    v = f.to_vector()
    assert len(v) == AMBIENT.rank
    assert SuperPolynomial.from_vector(AMBIENT, v) == f


def test_ambient_mismatch():
    other = Ambient(QQ_FIELD, ("x",), ("t1",))
    with pytest.raises(AmbientMismatch):
        SuperPolynomial.one(AMBIENT) + SuperPolynomial.one(other)


@settings(max_examples=1000, deadline=None)
@given(homogeneous, homogeneous)
def test_supercommutativity_sign_law(a, b):
    sign = -1 if a.parity() is Parity.ODD and b.parity() is Parity.ODD else 1
    assert a * b == (b * a).scale(sign)


@settings(max_examples=1000, deadline=None)
@given(superpolys, superpolys, superpolys)
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert dense(a * b) == dense_mul(dense(a), dense(b))


@settings(max_examples=1000, deadline=None)
@given(homogeneous)
def test_odd_elements_square_to_zero(f):
    if f.parity() is Parity.ODD:
        assert (f * f).is_zero


@settings(max_examples=200, deadline=None)
@given(superpolys, st.integers(0, 3))
def test_power_matches_repeated_product(f, k):
    expected = SuperPolynomial.one(AMBIENT)
    for _ in range(k):
        expected = expected * f
    assert f ** k == expected


def test_free_function_examples():
    x = SuperPolynomial.even_variable(AMBIENT, 0)
    t1, t2, t3 = (SuperPolynomial.odd_variable(AMBIENT, i) for i in (1, 2, 3))
    components = grassmann_components(x + x * t1 * t2)
    assert set(components) == {0, mask_from_indices([1, 2])}
    assert all(poly == AMBIENT.poly_ring.gens[0] for poly in components.values())
    assert parity_of(spoly_mul(spoly_mul(t1, t2), t3)) is Parity.ODD
    assert spoly_add(x * t1, -(x * t1)).is_zero
    assert spoly_mul(t2, t1) == -spoly_mul(t1, t2)
    even, odd = homogeneous_split(x + t1 + t1 * t2)
    assert even == x + t1 * t2 and odd == t1


@settings(max_examples=500, deadline=None)
@given(superpolys)
def test_components_reassemble(f):
    assert reassemble(AMBIENT, grassmann_components(f)) == f
    even, odd = homogeneous_split(f)
    assert spoly_add(even, odd) == f
    assert even.is_zero or parity_of(even) is Parity.EVEN
    assert odd.is_zero or parity_of(odd) is Parity.ODD


@settings(max_examples=500, deadline=None)
@given(homogeneous, homogeneous)
def test_free_functions_follow_sign_law(a, b):
    odd = parity_of(a) is Parity.ODD and parity_of(b) is Parity.ODD
    assert spoly_mul(a, b) == spoly_mul(b, a).scale(-1 if odd else 1)
    assert spoly_add(a, b) == spoly_add(b, a)


def test_monic_normalization():
    x = SuperPolynomial.even_variable(AMBIENT, 0)
    t1 = SuperPolynomial.odd_variable(AMBIENT, 1)
    assert (-3 * x * t1 + 6).monic() == x * t1 - 2
    assert SuperPolynomial.zero(AMBIENT).monic().is_zero


def main():
    """Run the deterministic checks"""
    print("Superpolynomial arithmetic")
    print("=" * 50)
    checks = [test_odd_mul_signs, test_theta_squares_vanish, test_parity_and_split,
              test_vector_encoding, test_ambient_mismatch, test_free_function_examples,
              test_monic_normalization]
    ok = True
    for check in checks:
        try:
            check()
            print(f"  PASS {check.__name__}")
        except AssertionError as exc:
            ok = False
            print(f"  FAIL {check.__name__}: {exc}")
    return ok


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
