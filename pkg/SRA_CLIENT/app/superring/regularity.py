"""
Local regularity at rational points, the global defect locus and the
Dedekind verdict.

A rational maximal ideal is (x_1 - a_1, .., x_n - a_n, theta_1, .., theta_d).
Local regularity asks that R/J_R is regular at the point and that the
even annihilator of the product of a minimal odd generating system agrees
with R1^2 after localizing.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Sequence

from sympy.polys.matrices import DomainMatrix

from algebra.grassmann import SuperPolynomial
from engine.ideals import evaluate_at, ideal_gb, in_radical, krull_dim_quotient
from engine.jacobian import jacobian_ideal, jacobian_rank_at
from errors import NonRationalPoint, NotPrime
from superring.dimension import SuperDimension, even_ksdim
from superring.predicates import is_superdomain
from superring.ring import RingPresentation
from superring.superideal import SuperIdeal, annihilator, even_parts, ideal_colon, is_zerodivisor
from superring.verdict import Decision, Verdict, conjunction

logger = logging.getLogger(__name__)


class Regularity(Enum):
    REGULAR = "regular"
    NOT_REGULAR = "not_regular"
    UNKNOWN = "unknown"

    @classmethod
    def from_verdict(cls, verdict: Verdict) -> "Regularity":
        return {Verdict.TRUE: cls.REGULAR, Verdict.FALSE: cls.NOT_REGULAR}.get(verdict, cls.UNKNOWN)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class MaximalIdealPoint:
    ideal: SuperIdeal
    coordinates: tuple

    @property
    def ring(self) -> RingPresentation:
        return self.ideal.ring

    @classmethod
    def from_ideal(cls, m: SuperIdeal) -> "MaximalIdealPoint":
        R = m.ring
        if m.is_unit():
            raise NotPrime("the unit ideal is not maximal")
        for theta in R.thetas():
            if not m.contains(theta):
                raise NotPrime(f"maximal ideals contain every odd variable; {theta} is missing")
        coordinates = []
        for i in range(R.n):
            rest = m.gb.normal_form(R.even(i).to_vector())
            value = rest[0]
            if any(rest[1:]) or not value.is_ground:
                raise NonRationalPoint(f"{R.ambient.evens[i]} is not constant modulo the ideal")
            coordinates.append(value.coeff(1) if value else R.field.domain.zero)
        return cls(m, tuple(coordinates))

    @classmethod
    def from_coordinates(cls, R: RingPresentation, coordinates: Sequence) -> "MaximalIdealPoint":
        K = R.field.domain
        point = tuple(R.field.scalar(a) for a in coordinates)
        if len(point) != R.n:
            raise NonRationalPoint(f"expected {R.n} coordinates, got {len(point)}")
        if any(evaluate_at(f, point) != K.zero for f in R.superreduced_ideal()):
            raise NotPrime("the point does not lie on the superreduced variety")
        gens = [R.even(i) - R.constant(a) for i, a in enumerate(point)] + R.thetas()
        return cls(SuperIdeal(R, gens), point)

    def label(self) -> str:
        return "(" + ", ".join(self.ring.field.format(a) for a in self.coordinates) + ")"


@dataclass
class RegularityReport:
    verdict: Regularity
    reduced_regular: Verdict
    odd_condition: Verdict
    minimal_odd: list = field(default_factory=list)
    cotangent: SuperDimension | None = None
    witnesses: list = field(default_factory=list)

    def __str__(self):
        text = f"{self.verdict} (reduced ring: {self.reduced_regular}, odd condition: {self.odd_condition})"
        if self.witnesses:
            text += "; " + "; ".join(self.witnesses)
        return text


def _point_of(R: RingPresentation, m) -> MaximalIdealPoint:
    if isinstance(m, MaximalIdealPoint):
        return m
    return MaximalIdealPoint.from_ideal(m)


def _degree_one_relations(R: RingPresentation) -> list:
    """Rows (in C) of the theta_i-coefficients of the odd module generators of a."""
    rows = []
    for v in R.module_gb.generators:
        row = [v[1 << i] for i in range(R.d)]
        if any(row):
            rows.append(row)
    return rows


def minimal_odd_generators_at(R: RingPresentation, m) -> list[SuperPolynomial]:
    """Thetas lifting a basis of R1 / m0 R1 at a rational point."""
    pt = _point_of(R, m)
    if R.d == 0:
        return []
    K = R.field.domain
    rows = [[evaluate_at(c, pt.coordinates) for c in row] for row in _degree_one_relations(R)]
    rows = [row for row in rows if any(a != K.zero for a in row)]
    if not rows:
        return R.thetas()
    _, pivots = DomainMatrix(rows, (len(rows), R.d), K).rref()
    return [R.theta(j + 1) for j in range(R.d) if j not in pivots]


def _odd_squares(R: RingPresentation) -> SuperIdeal:
    """The superideal generated by R1^2."""
    return SuperIdeal(R, [a * b for a, b in combinations(R.thetas(), 2)])


def cotangent_sdim(R: RingPresentation, m) -> SuperDimension:
    """Super dimension of m/m^2 over the residue field."""
    pt = _point_of(R, m)
    rank = jacobian_rank_at(R.superreduced_ideal(), R.C, pt.coordinates)
    return SuperDimension(R.n - rank, len(minimal_odd_generators_at(R, pt)))


def _reduced_regular_at(R: RingPresentation, pt: MaximalIdealPoint) -> Verdict:
    if not R.field.is_rational:
        return Verdict.UNKNOWN
    c = R.superreduced_ideal()
    codim = R.n - krull_dim_quotient(c, R.C)
    return Verdict.of(jacobian_rank_at(c, R.C, pt.coordinates) == codim)


def is_regular_at(R: RingPresentation, m) -> RegularityReport:
    pt = _point_of(R, m)
    reduced = _reduced_regular_at(R, pt)
    odd = minimal_odd_generators_at(R, pt)
    z = R.one()
    for theta in odd:
        z = z * theta
    ann = annihilator(z, R)
    squares = _odd_squares(R)
    ann_even = SuperIdeal(R, even_parts(ann.module_generators()))
    colon = ideal_colon(squares, ann_even)
    local = any(not pt.ideal.contains(g) for g in colon.generators)
    witnesses = []
    if not local:
        label = "*".join(str(t) for t in odd) or "1"
        for g in ann_even.generators:
            if not squares.contains(g):
                witnesses.append(f"{g} in Ann({label}) but not in R1^2")
                break
        if any(not pt.ideal.contains(g) for g in ann.generators):
            witnesses.append(f"{label} vanishes locally at {pt.label()}")
    if reduced is Verdict.FALSE:
        witnesses.append(f"reduced ring singular at {pt.label()}")
    verdict = conjunction(reduced, Verdict.of(local))
    return RegularityReport(Regularity.from_verdict(verdict), reduced, Verdict.of(local),
                            odd, cotangent_sdim(R, pt), witnesses)


def regular_defect_locus(R: RingPresentation) -> tuple[list, bool]:
    """(C-ideal cutting out the points where the odd condition fails, certified flag)."""
    if R.d == 0:
        return [R.C.one], True
    z = R.one()
    for theta in R.thetas():
        z = z * theta
    ann_even = SuperIdeal(R, even_parts(annihilator(z, R).module_generators()))
    colon = ideal_colon(_odd_squares(R), ann_even)
    c = R.superreduced_ideal()
    defect = ideal_gb(colon.even_projection() + c, R.C).polys()
    certified = all(in_radical(entry, c, R.C) for row in _degree_one_relations(R) for entry in row)
    if not certified:
        logger.warning("regular_defect_locus: odd variables not minimal everywhere, locus uncertified")
    return defect, certified


def is_dedekind(R: RingPresentation) -> Decision:
    """Regular of Krull superdimension 1|N; the witness comes from the first failed check."""
    checks, witnesses = {}, {}
    domain = is_superdomain(R)
    checks["superdomain"] = domain.verdict
    witnesses["superdomain"] = domain.witness
    dim = even_ksdim(R)
    checks["even dimension 1"] = Verdict.of(dim == 1)
    witnesses["even dimension 1"] = f"even Krull dimension {dim}"
    if R.field.is_rational:
        singular = ideal_gb(jacobian_ideal(R.superreduced_ideal(), R.C), R.C)
        checks["reduced ring smooth"] = Verdict.of(singular.is_unit())
        witnesses["reduced ring smooth"] = singular.polys()
    else:
        checks["reduced ring smooth"] = Verdict.UNKNOWN
    defect, certified = regular_defect_locus(R)
    unit = ideal_gb(defect, R.C).is_unit()
    checks["odd condition everywhere"] = Verdict.of(unit) if certified else Verdict.UNKNOWN
    witnesses["odd condition everywhere"] = list(defect)
    verdict = conjunction(*checks.values())
    failed = [name for name, v in checks.items() if v is not Verdict.TRUE]
    witness = next((witnesses[name] for name in failed
                    if checks[name] is Verdict.FALSE and witnesses.get(name) is not None), None)
    reason = ", ".join(f"{name}: {checks[name]}" for name in failed)
    return Decision(verdict, witness, reason)


def regular_ideal_probe(R: RingPresentation, m) -> Decision:
    """Look for a non-zerodivisor inside m among its even generators and x_i - a_i."""
    pt = _point_of(R, m)
    probes = [g for g in pt.ideal.generators if g.is_even_only()]
    probes += [R.even(i) - R.constant(a) for i, a in enumerate(pt.coordinates)]
    for r in probes:
        if R.is_zero(r):
            continue
        if not is_zerodivisor(r, R):
            return Decision(Verdict.TRUE, r, f"{r} is a non-zerodivisor in m")
    return Decision(Verdict.UNKNOWN, reason="no non-zerodivisor among the probes")


def dvr_check_local(R: RingPresentation, m) -> Decision:
    pt = _point_of(R, m)
    report = is_regular_at(R, pt)
    if report.verdict is Regularity.NOT_REGULAR:
        return Decision(Verdict.FALSE, report.witnesses, "not regular")
    probe = regular_ideal_probe(R, pt)
    if probe.verdict is not Verdict.TRUE:
        return Decision(Verdict.UNKNOWN, reason="maximal ideal not shown to be regular")
    c = R.superreduced_ideal()
    dim_one = Verdict.of(krull_dim_quotient(c, R.C) == 1)
    z = R.one()
    for theta in report.minimal_odd:
        z = z * theta
    nonvanishing = Verdict.of(all(pt.ideal.contains(g) for g in annihilator(z, R).generators))
    verdict = conjunction(dim_one, report.reduced_regular, nonvanishing)
    reason = f"dimension one: {dim_one}, smooth: {report.reduced_regular}, odd product nonzero: {nonvanishing}"
    return Decision(verdict, probe.witness, reason)
