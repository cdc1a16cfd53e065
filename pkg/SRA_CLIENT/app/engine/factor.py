"""Irreducibility certificates for univariate polynomials of C."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm

from sympy import divisors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (gf_ddf_zassenhaus, gf_factor,
                                     gf_from_int_poly, gf_monic, gf_sqf_p)

import config
from frontend.printer import format_poly
from errors import ZeroInput

logger = logging.getLogger(__name__)


class CertKind(Enum):
    IRREDUCIBLE = "irreducible"
    REDUCIBLE = "reducible"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Certificate:
    kind: CertKind
    prime: int | None = None
    factor: object = None   # PolyElement of the input ring

    def __str__(self):
        if self.kind is CertKind.IRREDUCIBLE:
            return f"irreducible (mod {self.prime})" if self.prime else "irreducible"
        if self.kind is CertKind.REDUCIBLE:
            return f"reducible (factor {format_poly(self.factor)})"
        return "unknown"


def univariate_index(f) -> int | None:
    """Index of the single generator f depends on; None if constant or multivariate."""
    used = {i for m in f.itermonoms() for i, e in enumerate(m) if e}
    return used.pop() if len(used) == 1 else None


def _dense(f, index: int) -> list:
    """Coefficients of f in descending powers of generator index."""
    degree = max(m[index] for m in f.itermonoms())
    coeffs = [f.ring.domain.zero] * (degree + 1)
    for m, c in f.iterterms():
        coeffs[degree - m[index]] = c
    return coeffs


def _primitive_integer(coeffs, domain) -> list[int]:
    fracs = [Fraction(int(domain.numer(c)), int(domain.denom(c))) for c in coeffs]
    scale = lcm(*(q.denominator for q in fracs))
    ints = [int(q * scale) for q in fracs]
    content = gcd(*ints)
    return [c // content for c in ints]


def _rational_root(ints: list[int]) -> Fraction | None:
    if ints[-1] == 0:
        return Fraction(0)
    for p in divisors(abs(ints[-1])):
        for q in divisors(abs(ints[0])):
            for root in (Fraction(p, q), Fraction(-p, q)):
                value = Fraction(0)
                for c in ints:
                    value = value * root + c
                if value == 0:
                    return root
    return None


def _from_gf(coeffs, ring, index):
    x = ring.gens[index]
    out = ring.zero
    for c in coeffs:
        out = out * x + int(c)
    return out


def irreducible_cert(f, primes=None) -> Certificate:
    """Certify irreducibility of a univariate f over the rationals by reduction mod p.

    A squarefree reduction that stays irreducible of the same degree modulo
    some tried prime certifies irreducibility; a rational root certifies a
    linear factor.  Anything else is UNKNOWN.
    """
    if not f or f.is_ground:
        raise ZeroInput("irreducibility needs a nonconstant polynomial")
    index = univariate_index(f)
    if index is None:
        return Certificate(CertKind.UNKNOWN)
    ring = f.ring
    ints = _primitive_integer(_dense(f, index), ring.domain)
    degree = len(ints) - 1
    if degree == 1:
        return Certificate(CertKind.IRREDUCIBLE)

    root = _rational_root(ints)
    if root is not None:
        x = ring.gens[index]
        return Certificate(CertKind.REDUCIBLE, factor=x * root.denominator - root.numerator)

    for p in primes or config.CERT_PRIMES:
        if ints[0] % p == 0:
            continue
        fp = gf_from_int_poly(ints, p)
        if not gf_sqf_p(fp, p, ZZ):
            continue
        _, fp = gf_monic(fp, p, ZZ)
        parts = gf_ddf_zassenhaus(fp, p, ZZ)
        if len(parts) == 1 and parts[0][1] == degree:
            logger.debug(f"irreducible_cert: certified modulo {p}")
            return Certificate(CertKind.IRREDUCIBLE, prime=p)
        logger.debug(f"irreducible_cert: splits modulo {p} into degrees {[d for _, d in parts]}")
    return Certificate(CertKind.UNKNOWN)


def irreducible_mod_p(f, p: int) -> Certificate:
    """Exact decision for a univariate f over GF(p)."""
    if not f or f.is_ground:
        raise ZeroInput("irreducibility needs a nonconstant polynomial")
    index = univariate_index(f)
    if index is None:
        return Certificate(CertKind.UNKNOWN)
    K = f.ring.domain
    coeffs = [int(K.to_int(c)) % p for c in _dense(f, index)]
    degree = len(coeffs) - 1
    _, factors = gf_factor(gf_from_int_poly(coeffs, p), p, ZZ)
    if len(factors) == 1 and factors[0][1] == 1 and len(factors[0][0]) - 1 == degree:
        return Certificate(CertKind.IRREDUCIBLE, prime=p)
    return Certificate(CertKind.REDUCIBLE, prime=p, factor=_from_gf(factors[0][0], f.ring, index))

