"""Superideals of a presented superring and their algebra."""

from __future__ import annotations

import logging
from typing import Iterable, Sequence

from algebra.grassmann import Parity, SuperPolynomial
from engine.groebner import GroebnerBasis, module_intersection, preimage
from engine.ideals import ideal_gb
from errors import AmbientMismatch, NotHomogeneous, ZeroInput
from frontend.printer import format_generators
from superring.ring import RingPresentation, homogeneous_split_gens

logger = logging.getLogger(__name__)


class SuperIdeal:
    """Homogeneously generated, theta-closed ideal of R (always containing the defining ideal)."""

    def __init__(self, ring: RingPresentation, generators: Iterable[SuperPolynomial] = (), name: str | None = None):
        self.ring = ring
        self.name = name
        reduced = (ring.reduce(g) for g in homogeneous_split_gens(generators))
        self.generators = tuple(g for g in reduced if g)
        self._gb = None

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = self.ring.closed_gb(self.generators)
        return self._gb

    def module_generators(self) -> list[SuperPolynomial]:
        """C-module generators (theta-closed), reduced modulo the defining ideal."""
        out = []
        for v in self.gb.generators:
            g = self.ring.reduce(SuperPolynomial.from_vector(self.ring.ambient, v))
            if g:
                out.append(g)
        return out

    def contains(self, f: SuperPolynomial) -> bool:
        return self.gb.contains(f.to_vector())

    def __contains__(self, f):
        return self.contains(f)

    def is_unit(self) -> bool:
        return self.contains(self.ring.one())

    def is_zero(self) -> bool:
        return not self.generators

    def even_projection(self) -> list:
        """GB of the C-ideal of empty-mask components; contains c."""
        return ideal_gb([v[0] for v in self.gb.generators if v[0]], self.ring.C).polys()

    def scaled(self, f: SuperPolynomial) -> "SuperIdeal":
        return SuperIdeal(self.ring, [f * g for g in self.generators])

    def display_generators(self) -> list[SuperPolynomial]:
        """Generators made monic, first occurrence kept."""
        return list(dict.fromkeys(g.monic() for g in self.generators))

    def __str__(self):
        if self.name:
            return self.name
        return format_generators(self.display_generators())

    def __repr__(self):
        return f"SuperIdeal({self})"


def _same_ring(*ideals: SuperIdeal) -> RingPresentation:
    ring = ideals[0].ring
    for other in ideals[1:]:
        if other.ring is not ring:
            raise AmbientMismatch("superideals belong to different rings")
    return ring


def ideal_membership(f: SuperPolynomial, b: SuperIdeal) -> bool:
    b.ring.ambient.check(f.ambient)
    return b.contains(f)


def ideal_subset(b: SuperIdeal, c: SuperIdeal) -> bool:
    _same_ring(b, c)
    return all(c.contains(g) for g in b.generators)


def ideal_equal(b: SuperIdeal, c: SuperIdeal) -> bool:
    return ideal_subset(b, c) and ideal_subset(c, b)


def ideal_sum(b: SuperIdeal, c: SuperIdeal) -> SuperIdeal:
    ring = _same_ring(b, c)
    return SuperIdeal(ring, b.generators + c.generators)


def ideal_product(b: SuperIdeal, c: SuperIdeal) -> SuperIdeal:
    ring = _same_ring(b, c)
    return SuperIdeal(ring, [g * h for g in b.generators for h in c.generators])


def ideal_power(b: SuperIdeal, k: int) -> SuperIdeal:
    if k < 0:
        raise ValueError("negative ideal powers are not defined")
    result = SuperIdeal(b.ring, [b.ring.one()])
    for _ in range(k):
        result = ideal_product(result, b)
    return result


def ideal_intersection(b: SuperIdeal, c: SuperIdeal) -> SuperIdeal:
    ring = _same_ring(b, c)
    vectors = module_intersection(b.gb.generators, c.gb.generators, ring.C, ring.rank)
    return SuperIdeal(ring, [SuperPolynomial.from_vector(ring.ambient, v) for v in vectors])


def ideal_colon(b: SuperIdeal, c: SuperIdeal) -> SuperIdeal:
    """(b : c) = {f in R : f*c in b}."""
    ring = _same_ring(b, c)
    ambient = ring.ambient
    hs = c.generators
    if not hs:
        return SuperIdeal(ring, [ring.one()])
    r = ring.rank
    blocks = len(hs)
    zero = (ring.C.zero,) * r
    # f = sum c_I theta_I maps to (f*h_1, ..., f*h_m) in R^m
    columns = []
    for mask in range(r):
        theta_I = SuperPolynomial.odd_monomial(ambient, mask)
        columns.append(sum(((theta_I * h).to_vector() for h in hs), ()))
    target = []
    for j in range(blocks):
        for v in b.gb.generators:
            target.append(zero * j + tuple(v) + zero * (blocks - j - 1))
    coefficients = preimage(columns, target, ring.C, r * blocks)
    return SuperIdeal(ring, [SuperPolynomial.from_vector(ambient, v) for v in coefficients])


def annihilator(f: SuperPolynomial, ring: RingPresentation) -> SuperIdeal:
    return ideal_colon(SuperIdeal(ring), SuperIdeal(ring, [f]))


def is_zerodivisor(f: SuperPolynomial, ring: RingPresentation) -> bool:
    """True iff some nonzero element of R kills f."""
    f = ring.reduce(f)
    if not f:
        raise ZeroInput("zerodivisor test of an element that is zero in the ring")
    if f.parity() is Parity.MIXED:
        raise NotHomogeneous("zerodivisor test needs a homogeneous element")
    ann = annihilator(f, ring)
    found = not ann.is_zero()
    logger.debug(f"is_zerodivisor({f}): annihilator {ann}")
    return found


def even_parts(gens: Sequence[SuperPolynomial]) -> list[SuperPolynomial]:
    parts = (g.homogeneous_split()[0] for g in gens)
    return [p for p in parts if p]
