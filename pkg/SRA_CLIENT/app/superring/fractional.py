"""Fractional superideals (1/den)*N of K(R) and elements of K(R)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable

from sympy.polys.polyerrors import PolynomialError

from algebra.grassmann import Parity, SuperPolynomial
from errors import NoUnitCandidate, NotPrime, ZeroIdeal, ZerodivisorDenominator
from superring.predicates import is_prime
from superring.ring import RingPresentation
from superring.superideal import (SuperIdeal, even_parts, ideal_colon, ideal_equal,
                                  ideal_product, is_zerodivisor)
from superring.verdict import Decision, Verdict

logger = logging.getLogger(__name__)


def _check_denominator(R: RingPresentation, den: SuperPolynomial) -> SuperPolynomial:
    den = R.reduce(den)
    if not den:
        raise ZerodivisorDenominator("denominator is zero in the ring")
    if den.parity() is not Parity.EVEN:
        raise ZerodivisorDenominator(f"denominator {den} must be even")
    if is_zerodivisor(den, R):
        raise ZerodivisorDenominator(f"denominator {den} is a zerodivisor")
    return den


def _exact_quotient(f: SuperPolynomial, q) -> SuperPolynomial | None:
    """f / q componentwise for q in C, or None if some component is not divisible."""
    components = {}
    for mask, poly in f.grassmann_components().items():
        quotient, remainder = poly.div(q)
        if remainder:
            return None
        components[mask] = quotient
    return SuperPolynomial(f.ambient, components)


def _cancel(R: RingPresentation, numerators: list[SuperPolynomial], den: SuperPolynomial):
    """Divide den and every numerator by the factors of den they all share."""
    if not den.is_even_only():
        return numerators, den
    base = den.component(0)
    try:
        _, factors = base.factor_list()
    except (NotImplementedError, PolynomialError):
        return numerators, den
    for q, multiplicity in factors:
        for _ in range(multiplicity):
            quotients = [_exact_quotient(g, q) for g in numerators]
            if any(x is None for x in quotients):
                break
            numerators = quotients
            base = base.div(q)[0]
    K = R.field.domain
    scale = K.quo(K.one, base.LC)
    return [g.scale(scale) for g in numerators], R.from_even(base.mul_ground(scale))


class FractionalSuperideal:
    """M = (1/denominator) * numerator inside K(R)."""

    def __init__(self, numerator: SuperIdeal, denominator: SuperPolynomial):
        self.numerator = numerator
        self.denominator = denominator

    @property
    def ring(self) -> RingPresentation:
        return self.numerator.ring

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __str__(self):
        if self.denominator == self.ring.one():
            return str(self.numerator)
        return f"(1/({self.denominator}))*{self.numerator}"


def frac_make(R: RingPresentation, gens: Iterable[SuperPolynomial], den: SuperPolynomial | None = None) -> FractionalSuperideal:
    den = R.one() if den is None else _check_denominator(R, den)
    return FractionalSuperideal(SuperIdeal(R, gens), den)


def frac_principal(R: RingPresentation, u) -> FractionalSuperideal:
    """uR for an even non-zerodivisor u, or (a)/d for a KFraction a/d."""
    if isinstance(u, KFraction):
        return frac_make(R, [u.num], u.den)
    _check_denominator(R, u)
    return frac_make(R, [u])


def frac_normalize(M: FractionalSuperideal) -> FractionalSuperideal:
    R = M.ring
    numerators, den = _cancel(R, list(M.numerator.generators), M.denominator)
    return FractionalSuperideal(SuperIdeal(R, numerators), den)


def frac_product(M: FractionalSuperideal, N: FractionalSuperideal) -> FractionalSuperideal:
    R = M.ring
    return FractionalSuperideal(ideal_product(M.numerator, N.numerator), R.reduce(M.denominator * N.denominator))


def frac_equal(M: FractionalSuperideal, N: FractionalSuperideal) -> bool:
    return ideal_equal(M.numerator.scaled(N.denominator), N.numerator.scaled(M.denominator))


def _unit_candidates(M: FractionalSuperideal, hint: SuperPolynomial | None) -> list[SuperPolynomial]:
    out, seen = [], set()
    pool = ([hint] if hint is not None else []) + even_parts(M.numerator.generators) \
        + even_parts(M.numerator.module_generators())
    for g in pool:
        g = M.ring.reduce(g)
        if g and g.component(0) and g.canonical_key() not in seen:
            seen.add(g.canonical_key())
            out.append(g)
    return out


def frac_inverse(M: FractionalSuperideal, hint: SuperPolynomial | None = None) -> FractionalSuperideal:
    """M^-1 = (1/c) * ((c*den) : N) for an even non-zerodivisor c of N."""
    if M.is_zero():
        raise ZeroIdeal("the zero fractional superideal has no inverse")
    R = M.ring
    for c in _unit_candidates(M, hint):
        if is_zerodivisor(c, R):
            logger.debug(f"frac_inverse: candidate {c} is a zerodivisor")
            continue
        colon = ideal_colon(SuperIdeal(R, [c * M.denominator]), M.numerator)
        return FractionalSuperideal(colon, c)
    raise NoUnitCandidate(f"no even non-zerodivisor found in {M.numerator}")


def is_invertible(M: FractionalSuperideal, hint: SuperPolynomial | None = None) -> Decision:
    """M^-1 M = R, with the product as witness when it is proper."""
    try:
        inverse = frac_inverse(M, hint)
    except NoUnitCandidate as exc:
        return Decision(Verdict.FALSE, exc.message, "no even non-zerodivisor in M")
    product = frac_normalize(frac_product(inverse, M))
    if product.numerator.contains(product.denominator):
        return Decision(Verdict.TRUE, inverse, "M^-1 M = R")
    return Decision(Verdict.FALSE, product, "M^-1 M is a proper superideal")


def contained_at(b: SuperIdeal, c: SuperIdeal, p: SuperIdeal) -> bool:
    """b_p contained in c_p, i.e. (c : b) is not inside p."""
    if is_prime(p).verdict is not Verdict.TRUE:
        raise NotPrime(f"{p} is not certified prime")
    colon = ideal_colon(c, b)
    return any(not p.contains(g) for g in colon.generators)


def is_invertible_at(M: FractionalSuperideal, p: SuperIdeal, hint: SuperPolynomial | None = None) -> bool:
    """M_p invertible, i.e. R_p is contained in (M^-1 M)_p."""
    product = frac_normalize(frac_product(frac_inverse(M, hint), M))
    return contained_at(SuperIdeal(M.ring, [product.denominator]), product.numerator, p)


@dataclass(frozen=True)
class KFraction:
    """num/den in the total superring of fractions."""

    num: SuperPolynomial
    den: SuperPolynomial

    def __str__(self):
        return f"({self.num})/({self.den})"


def kfrac_make(R: RingPresentation, num: SuperPolynomial, den: SuperPolynomial | None = None) -> KFraction:
    den = R.one() if den is None else _check_denominator(R, den)
    return KFraction(R.reduce(num), den)


def kfrac_add(R: RingPresentation, a: KFraction, b: KFraction) -> KFraction:
    return KFraction(R.reduce(a.num * b.den + b.num * a.den), R.reduce(a.den * b.den))


def kfrac_sub(R: RingPresentation, a: KFraction, b: KFraction) -> KFraction:
    return KFraction(R.reduce(a.num * b.den - b.num * a.den), R.reduce(a.den * b.den))


def kfrac_mul(R: RingPresentation, a: KFraction, b: KFraction) -> KFraction:
    return KFraction(R.reduce(a.num * b.num), R.reduce(a.den * b.den))


def kfrac_eq(R: RingPresentation, a: KFraction, b: KFraction) -> bool:
    return R.equal(a.num * b.den, b.num * a.den)


def kfrac_normalize(R: RingPresentation, a: KFraction) -> KFraction:
    if not a.num:
        return KFraction(a.num, R.one())
    (num,), den = _cancel(R, [a.num], a.den)
    return KFraction(R.reduce(num), den)
