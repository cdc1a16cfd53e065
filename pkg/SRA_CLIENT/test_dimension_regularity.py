#!/usr/bin/env python3
"""
Krull superdimension, local regularity, the defect locus and the
Dedekind verdict
"""

import sys
import os
sys.path.append(os.path.join(os.path.dirname(__file__), 'app'))

import pytest

from algebra.fields import Field
from engine.ideals import evaluate_at, ideal_equal as commutative_equal, ideal_gb
from errors import NonRationalPoint, NotPrime
from frontend.expr_parser import parse_expr
from superring.corpus import ENTRIES, corpus_points, corpus_ring
from superring.dimension import SuperDimension, ann_even, even_ksdim, ksdim, odd_ksdim
from superring.predicates import is_superfield
from superring.regularity import (MaximalIdealPoint, Regularity, cotangent_sdim, dvr_check_local,
                                  is_dedekind, is_regular_at, minimal_odd_generators_at,
                                  regular_defect_locus)
from superring.ring import make_ring
from superring.superideal import SuperIdeal
from superring.verdict import Verdict

QQ_FIELD = Field(0)


def free_ring(N):
    return make_ring(QQ_FIELD, ["x"], [f"t{i}" for i in range(1, N + 1)])


def origin(R):
    return MaximalIdealPoint.from_coordinates(R, (0,) * R.n)


@pytest.mark.parametrize("N", range(5))
def test_free_rings_are_dedekind(N):
    R = free_ring(N)
    assert ksdim(R) == SuperDimension(1, N)
    assert str(ksdim(R)) == f"1|{N}"
    decision = is_dedekind(R)
    assert decision.verdict is Verdict.TRUE, decision.reason


def test_ksdim_examples():
    assert str(ksdim(corpus_ring("free1"))) == "1|1"
    assert str(ksdim(corpus_ring("counter"))) == "1|1"
    assert str(ksdim(corpus_ring("plane"))) == "2|1"
    assert even_ksdim(make_ring(QQ_FIELD, ["x", "y"], [])) == 2
    assert even_ksdim(corpus_ring("cusp")) == 1


def test_ann_even_examples():
    S = corpus_ring("counter")
    X = S.C.gens[0]
    assert commutative_equal(ann_even(S, S.theta(1) * S.theta(2)), [X], S.C)
    F = corpus_ring("free1")
    assert ann_even(F, F.theta(1)) == []
    assert ann_even(F, F.zero()) == [F.C.one]


def test_odd_ksdim_examples():
    size, witness = odd_ksdim(free_ring(3))
    assert size == 3 and witness.indices == (1, 2, 3)
    size, witness = odd_ksdim(corpus_ring("counter"))
    assert size == 1 and witness.indices == (1,)
    assert odd_ksdim(corpus_ring("cusp")) == (0, None)


def test_odd_ksdim_ignores_redundant_generators():
    R = corpus_ring("free2")
    augmented = R.thetas() + [parse_expr("t1 + x*t2", R.ambient)]
    assert odd_ksdim(R, augmented)[0] == odd_ksdim(R)[0] == 2
    S = corpus_ring("counter")
    augmented = S.thetas() + [parse_expr("t1 + X*t2", S.ambient)]
    assert odd_ksdim(S, augmented)[0] == 1


def test_minimal_odd_generators():
    F = corpus_ring("free2")
    assert minimal_odd_generators_at(F, origin(F)) == F.thetas()
    T = corpus_ring("tilted")
    assert minimal_odd_generators_at(T, origin(T)) == [T.theta(1)]
    for pt in corpus_points("tilted"):
        assert len(minimal_odd_generators_at(T, pt)) == 1
    C = corpus_ring("cusp")
    assert minimal_odd_generators_at(C, origin(C)) == []


def test_cotangent_examples():
    assert cotangent_sdim(corpus_ring("free2"), origin(corpus_ring("free2"))) == SuperDimension(1, 2)
    assert cotangent_sdim(corpus_ring("tilted"), origin(corpus_ring("tilted"))) == SuperDimension(1, 1)
    cusp = corpus_ring("cusp")
    assert cotangent_sdim(cusp, origin(cusp)) == SuperDimension(2, 0)
    assert cotangent_sdim(cusp, MaximalIdealPoint.from_coordinates(cusp, (1, 1))) == SuperDimension(1, 0)


def test_maximal_ideal_points():
    F = corpus_ring("free1")
    m = SuperIdeal(F, [parse_expr("x - 3", F.ambient), F.theta(1)])
    pt = MaximalIdealPoint.from_ideal(m)
    assert pt.coordinates == (QQ_FIELD.scalar(3),)
    assert pt.label() == "(3)"
    with pytest.raises(NotPrime):
        MaximalIdealPoint.from_ideal(SuperIdeal(F, [F.even(0)]))
    with pytest.raises(NonRationalPoint):
        MaximalIdealPoint.from_ideal(SuperIdeal(F, [parse_expr("x^2 + 1", F.ambient), F.theta(1)]))
    with pytest.raises(NotPrime):
        MaximalIdealPoint.from_coordinates(corpus_ring("cusp"), (1, 2))


def test_regularity_examples():
    F = corpus_ring("free1")
    assert is_regular_at(F, origin(F)).verdict is Regularity.REGULAR

    S = corpus_ring("counter")
    report = is_regular_at(S, origin(S))
    assert report.verdict is Regularity.NOT_REGULAR
    assert report.odd_condition is Verdict.FALSE
    assert any(w.startswith("X in Ann(t1*t2)") for w in report.witnesses)

    report = is_regular_at(S, MaximalIdealPoint.from_coordinates(S, (1,)))
    assert report.verdict is Regularity.NOT_REGULAR
    assert any("vanishes locally" in w for w in report.witnesses)

    cusp = corpus_ring("cusp")
    report = is_regular_at(cusp, origin(cusp))
    assert report.verdict is Regularity.NOT_REGULAR and report.reduced_regular is Verdict.FALSE


def test_defect_locus_examples():
    F = corpus_ring("free2")
    defect, certified = regular_defect_locus(F)
    assert certified and ideal_gb(defect, F.C).is_unit()
    S = corpus_ring("counter")
    assert regular_defect_locus(S) == ([], True)
    C = corpus_ring("cusp")
    assert regular_defect_locus(C) == ([C.C.one], True)


def test_dedekind_examples():
    counter = is_dedekind(corpus_ring("counter"))
    assert counter.verdict is Verdict.FALSE and "odd condition" in counter.reason
    assert counter.witness == []
    C = corpus_ring("cusp")
    cusp = is_dedekind(C)
    assert cusp.verdict is Verdict.FALSE and "smooth" in cusp.reason
    x, y = C.C.gens
    assert commutative_equal(cusp.witness, [x**2, y], C.C)
    cross = corpus_ring("cross")
    decision = is_dedekind(cross)
    assert decision.verdict is Verdict.FALSE and decision.witness in cross.C.gens
    plane = is_dedekind(corpus_ring("plane"))
    assert plane.verdict is Verdict.FALSE and plane.witness == "even Krull dimension 2"
    assert is_dedekind(corpus_ring("section")).verdict is Verdict.TRUE


def test_dvr_examples():
    F = corpus_ring("free1")
    assert dvr_check_local(F, origin(F)).verdict is Verdict.TRUE
    section = corpus_ring("section")
    assert dvr_check_local(section, origin(section)).verdict is Verdict.TRUE
    S = corpus_ring("counter")
    assert dvr_check_local(S, origin(S)).verdict is Verdict.FALSE


def test_superfield_examples():
    point = make_ring(QQ_FIELD, ["x"], ["t"], [lambda A: parse_expr("x", A)])
    assert is_superfield(point).verdict is Verdict.TRUE
    assert is_superfield(corpus_ring("free1")).verdict is Verdict.FALSE
    assert is_superfield(corpus_ring("cross")).verdict is Verdict.FALSE


@pytest.mark.parametrize("name", [entry.name for entry in ENTRIES])
def test_regularity_agrees_with_defect_locus(name):
    R = corpus_ring(name)
    defect, certified = regular_defect_locus(R)
    if not certified:
        pytest.skip("defect locus not certified")
    K = R.field.domain
    for pt in corpus_points(name):
        in_locus = all(evaluate_at(f, pt.coordinates) == K.zero for f in defect)
        report = is_regular_at(R, pt)
        assert (report.odd_condition is Verdict.TRUE) == (not in_locus)


def main():
    """Run the example checks"""
    print("Dimension and regularity")
    print("=" * 50)
    checks = [test_ksdim_examples, test_ann_even_examples, test_odd_ksdim_examples,
              test_odd_ksdim_ignores_redundant_generators, test_minimal_odd_generators,
              test_cotangent_examples, test_regularity_examples, test_defect_locus_examples,
              test_dedekind_examples, test_dvr_examples, test_superfield_examples]
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
