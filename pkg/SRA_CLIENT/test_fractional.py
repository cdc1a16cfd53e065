#!/usr/bin/env python3
"""
Fractional superideals: normalization, products, inverses, localized
containment and fractions of the total superring of fractions
"""

import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), 'app'))

from itertools import product

import pytest

from errors import NoUnitCandidate, NotPrime, ZerodivisorDenominator
from frontend.expr_parser import parse_expr
from superring.corpus import ENTRIES, corpus_points, corpus_ring
from superring.fractional import (contained_at, frac_equal, frac_inverse, frac_make, frac_normalize,
                                  frac_principal, frac_product, is_invertible, is_invertible_at,
                                  kfrac_add, kfrac_eq, kfrac_make, kfrac_mul, kfrac_normalize, kfrac_sub)
from superring.regularity import is_dedekind
from superring.superideal import SuperIdeal, ideal_equal
from superring.verdict import Verdict

GROUP_RINGS = ["free1", "free2", "counter", "section", "plane"]


def elements(R, *texts):
    return [parse_expr(text, R.ambient) for text in texts]


def unit_ideal(R):
    return frac_make(R, [R.one()])


def test_normalize_examples():
    F = corpus_ring("free1")
    x, t = elements(F, "x", "t")
    M = frac_normalize(frac_make(F, [x**2, x * t], x))
    assert ideal_equal(M.numerator, SuperIdeal(F, [x, t]))
    assert M.denominator == F.one()

    M = frac_normalize(frac_make(F, [t]))
    assert ideal_equal(M.numerator, SuperIdeal(F, [t])) and M.denominator == F.one()

    M = frac_normalize(frac_make(F, [F.one()], x))
    assert M.numerator.is_unit() and M.denominator == x


def test_denominators_must_be_regular():
    F = corpus_ring("free1")
    x, t = elements(F, "x", "t")
    with pytest.raises(ZerodivisorDenominator):
        frac_make(F, [x], t)
    with pytest.raises(ZerodivisorDenominator):
        frac_make(F, [x], F.zero())
    S = corpus_ring("counter")
    with pytest.raises(ZerodivisorDenominator):
        frac_principal(S, S.even(0))


def test_product_examples():
    F = corpus_ring("free1")
    x, t = elements(F, "x", "t")
    assert frac_product(frac_make(F, [t]), frac_make(F, [t])).is_zero()
    m = frac_make(F, [x, t])
    square = frac_product(m, m)
    assert ideal_equal(square.numerator, SuperIdeal(F, [x**2, x * t]))
    assert frac_equal(frac_product(m, unit_ideal(F)), m)


def test_inverse_examples():
    F = corpus_ring("free1")
    x, t = elements(F, "x", "t")
    assert frac_equal(frac_inverse(frac_make(F, [x])), frac_make(F, [F.one()], x))
    assert frac_equal(frac_inverse(frac_make(F, [x, t])), frac_make(F, [x, t], x))
    assert "-" not in str(frac_normalize(frac_inverse(frac_make(F, [x, t]))))
    with pytest.raises(NoUnitCandidate):
        frac_inverse(frac_make(F, [t]))


def test_invertibility_examples():
    F = corpus_ring("free1")
    x, t = elements(F, "x", "t")
    assert is_invertible(frac_make(F, [x])).verdict is Verdict.TRUE

    m = SuperIdeal(F, [x, t])
    decision = is_invertible(frac_make(F, [x, t]))
    assert decision.verdict is Verdict.FALSE
    assert ideal_equal(decision.witness.numerator, m)
    assert decision.witness.denominator == F.one()

    decision = is_invertible(frac_make(F, [t]))
    assert decision.verdict is Verdict.FALSE and "non-zerodivisor" in decision.reason


def test_remark_property_for_odd_variables():
    R = corpus_ring("free2")
    x, t1, t2 = elements(R, "x", "t1", "t2")
    for a in range(-1, 3):
        m = frac_make(R, [x - a, t1, t2])
        inverse = frac_inverse(m)
        assert frac_equal(inverse, frac_make(R, [x - a, t1 * t2], x - a))
        assert is_invertible(m).verdict is Verdict.FALSE


def test_equality_and_localization_examples():
    F = corpus_ring("free1")
    x, t = elements(F, "x", "t")
    assert frac_equal(frac_make(F, [x]), frac_make(F, [x**2], x))
    b, c = SuperIdeal(F, [x]), SuperIdeal(F, [x**2])
    assert not contained_at(b, c, SuperIdeal(F, [x, t]))
    assert contained_at(b, c, SuperIdeal(F, [x - 1, t]))
    with pytest.raises(NotPrime):
        contained_at(b, c, SuperIdeal(F, [x]))

    m = frac_make(F, [x, t])
    assert not is_invertible_at(m, SuperIdeal(F, [x, t]))
    assert is_invertible_at(m, SuperIdeal(F, [x - 1, t]))


def test_kfrac_examples():
    F = corpus_ring("free1")
    x, t = elements(F, "x", "t")
    a = kfrac_make(F, t, x)
    total = kfrac_normalize(F, kfrac_add(F, a, a))
    assert total.num == 2 * t and total.den == x
    assert kfrac_eq(F, kfrac_add(F, a, a), kfrac_make(F, 2 * t, x))
    assert kfrac_eq(F, kfrac_make(F, x, x), kfrac_make(F, F.one()))
    square = kfrac_normalize(F, kfrac_mul(F, a, a))
    assert not square.num and square.den == F.one()
    assert kfrac_eq(F, kfrac_sub(F, a, a), kfrac_make(F, F.zero()))
    principal = frac_principal(F, a)
    assert frac_equal(principal, frac_make(F, [t], x))


def _principal_sample(R):
    u = R.even(0)
    v = R.even(R.n - 1)
    gens = [u + 1, u**2 + 2, v + 3]
    out = [frac_principal(R, g) for g in gens]
    out.append(frac_make(R, [gens[0]], gens[1]))
    return out


@pytest.mark.parametrize("name", GROUP_RINGS)
def test_fractional_group_law(name):
    R = corpus_ring(name)
    one = unit_ideal(R)
    sample = _principal_sample(R)
    sample.append(frac_product(sample[0], sample[2]))
    for M in sample:
        assert frac_equal(frac_product(M, one), M)
        assert frac_equal(frac_product(frac_inverse(M), M), one)
        assert is_invertible(M).verdict is Verdict.TRUE
    for M, N in product(sample[:3], repeat=2):
        assert frac_equal(frac_product(M, N), frac_product(N, M))
    A, B, C = sample[:3]
    assert frac_equal(frac_product(frac_product(A, B), C), frac_product(A, frac_product(B, C)))


@pytest.mark.parametrize("name", [entry.name for entry in ENTRIES if entry.odds])
def test_maximal_ideals_of_dedekind_rings_are_not_invertible(name):
    R = corpus_ring(name)
    if is_dedekind(R).verdict is not Verdict.TRUE:
        pytest.skip("not a Dedekind superring")
    points = corpus_points(name)
    assert len(points) >= 3
    for pt in points:
        M = frac_make(R, pt.ideal.generators)
        decision = is_invertible(M)
        assert decision.verdict is Verdict.FALSE, pt.label()
        assert ideal_equal(decision.witness.numerator, pt.ideal)


def main():
    """Run the example checks"""
    print("Fractional superideals")
    print("=" * 50)
    checks = [test_normalize_examples, test_denominators_must_be_regular, test_product_examples,
              test_inverse_examples, test_invertibility_examples, test_remark_property_for_odd_variables,
              test_equality_and_localization_examples, test_kfrac_examples]
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
