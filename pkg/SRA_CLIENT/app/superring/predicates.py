"""Primality, maximality and the superdomain family of predicates."""

from __future__ import annotations

import logging
from typing import Iterable

from sympy.polys.polyerrors import PolynomialError

from algebra.fields import Field
from algebra.grassmann import SuperPolynomial
from engine.factor import CertKind, irreducible_cert, irreducible_mod_p, univariate_index
from engine.ideals import ideal_gb, krull_dim_quotient
from frontend.printer import format_poly
from superring.ring import RingPresentation
from superring.superideal import SuperIdeal, is_zerodivisor
from superring.verdict import Decision, Verdict

logger = logging.getLogger(__name__)


def _principal_prime(f, field: Field) -> Decision:
    if univariate_index(f) is not None:
        if field.is_rational:
            cert = irreducible_cert(f)
        else:
            cert = irreducible_mod_p(f, field.characteristic)
        if cert.kind is CertKind.IRREDUCIBLE:
            return Decision(Verdict.TRUE, cert, str(cert))
        if cert.kind is CertKind.REDUCIBLE:
            return Decision(Verdict.FALSE, cert.factor, str(cert))
        return Decision(Verdict.UNKNOWN, reason=f"no irreducibility certificate for {format_poly(f)}")
    try:
        _, factors = f.factor_list()
    except (NotImplementedError, PolynomialError) as exc:
        logger.debug(f"factor_list failed on {format_poly(f)}: {exc}")
        return Decision(Verdict.UNKNOWN, reason="multivariate factorization unavailable over this field")
    if len(factors) == 1 and factors[0][1] == 1:
        return Decision(Verdict.TRUE, reason=f"{format_poly(f)} is irreducible")
    factor = factors[0][0]
    return Decision(Verdict.FALSE, factor, f"factor {format_poly(factor)}")


def commutative_prime(polys: Iterable, C, field: Field) -> Decision:
    """Restricted primality decision for an ideal of C.

    Linear generators of the reduced basis only eliminate a variable; the
    rest must be zero or a single polynomial, decided by certificate.
    """
    G = ideal_gb(polys, C)
    if G.is_unit():
        return Decision(Verdict.FALSE, reason="unit ideal")
    rest = [g for g in G.polys() if any(sum(m) > 1 for m in g.itermonoms())]
    if not rest:
        return Decision(Verdict.TRUE, reason="generated by linear forms")
    if len(rest) > 1:
        return Decision(Verdict.UNKNOWN, reason="not principal modulo linear generators")
    return _principal_prime(rest[0], field)


def is_prime(p: SuperIdeal) -> Decision:
    R = p.ring
    if p.is_unit():
        return Decision(Verdict.FALSE, reason="unit ideal")
    for i, theta in enumerate(R.thetas(), 1):
        if not p.contains(theta):
            return Decision(Verdict.FALSE, theta, f"{R.ambient.odds[i - 1]}^2 = 0 lies in the ideal, {R.ambient.odds[i - 1]} does not")
    return commutative_prime(p.even_projection(), R.C, R.field)


def is_maximal(p: SuperIdeal) -> Decision:
    prime = is_prime(p)
    if prime.verdict is Verdict.FALSE:
        return prime
    dim = krull_dim_quotient(p.even_projection(), p.ring.C)
    if dim > 0:
        return Decision(Verdict.FALSE, reason=f"quotient has Krull dimension {dim}")
    return prime


def is_superdomain(R: RingPresentation) -> Decision:
    return commutative_prime(R.superreduced_ideal(), R.C, R.field)


def is_superfield(R: RingPresentation) -> Decision:
    domain = is_superdomain(R)
    if domain.verdict is Verdict.FALSE:
        return domain
    dim = krull_dim_quotient(R.superreduced_ideal(), R.C)
    if dim > 0:
        return Decision(Verdict.FALSE, reason=f"superreduced ring has Krull dimension {dim}")
    return domain


def _strong_candidates(R: RingPresentation, probes: Iterable[SuperPolynomial]) -> list[SuperPolynomial]:
    C = R.C
    polys = []
    for v in R.module_gb.generators:
        for component in v:
            if component and not component.is_ground:
                polys.append(component)
                try:
                    polys.extend(g for g, _ in component.factor_list()[1])
                except (NotImplementedError, PolynomialError):
                    pass
    polys.extend(C.gens)
    seen, out = set(), []
    for probe in probes:
        even = probe.homogeneous_split()[0]
        if even and even.canonical_key() not in seen:
            seen.add(even.canonical_key())
            out.append(even)
    for poly in polys:
        candidate = R.from_even(poly.monic())
        if candidate.canonical_key() not in seen:
            seen.add(candidate.canonical_key())
            out.append(candidate)
    return out


def is_strong_superdomain(R: RingPresentation, probes: Iterable[SuperPolynomial] = ()) -> Decision:
    """Superdomain whose even elements outside R1^2 are all non-zerodivisors.

    Certified when the defining ideal is generated inside C (then R is free
    over R/J_R with a triangular action); refuted by an explicit witness;
    UNKNOWN otherwise.
    """
    domain = is_superdomain(R)
    if domain.verdict is Verdict.FALSE:
        return Decision(Verdict.FALSE, domain.witness, "not a superdomain")
    if all(g.is_even_only() for g in R.defining):
        return Decision(domain.verdict, reason="defining ideal generated in the even polynomial ring")
    c = ideal_gb(R.superreduced_ideal(), R.C)
    for r in _strong_candidates(R, probes):
        if c.contains((r.component(0),)):
            continue
        if is_zerodivisor(r, R):
            logger.info(f"strong superdomain witness: {r}")
            return Decision(Verdict.FALSE, r, f"{r} is a zerodivisor outside R1^2")
    logger.warning("is_strong_superdomain: no witness found, answering unknown")
    return Decision(Verdict.UNKNOWN, reason="no zerodivisor witness found outside R1^2")
