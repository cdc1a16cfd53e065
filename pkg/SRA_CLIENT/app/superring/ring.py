"""
Presented superrings R = k[x | theta] / a.

R is handled as the free C-module of rank 2^d with basis theta_I (I an odd
mask), C = k[x].  A superideal is the theta-closed C-submodule spanned by
its homogeneous generators together with a; everything is decided by
normal forms against its module Groebner basis.
"""

from __future__ import annotations

import logging
from typing import Iterable, Sequence

from algebra.fields import Field
from algebra.grassmann import Ambient, SuperPolynomial
from engine.cache import GBCache, content_key
from engine.groebner import GroebnerBasis, gb
from engine.ideals import ideal_gb
from engine.limits import check_odd
from errors import TrivialRing
from frontend.printer import format_generators

logger = logging.getLogger(__name__)


def homogeneous_split_gens(gens: Iterable[SuperPolynomial]) -> list[SuperPolynomial]:
    """Replace every generator by its nonzero even and odd parts."""
    out = []
    for g in gens:
        for part in g.homogeneous_split():
            if part:
                out.append(part)
    return out


def _closed_basis(ambient: Ambient, vectors: list) -> GroebnerBasis:
    ring = ambient.poly_ring
    G = gb(vectors, ring, ambient.rank)
    thetas = [SuperPolynomial.odd_variable(ambient, i) for i in range(1, ambient.d + 1)]
    for rounds in range(ambient.d + 1):
        missing = []
        for g in G.generators:
            element = SuperPolynomial.from_vector(ambient, g)
            for theta in thetas:
                v = (theta * element).to_vector()
                if not G.contains(v):
                    missing.append(v)
        if not missing:
            logger.debug(f"theta closure stable after {rounds} rounds, {len(G)} generators")
            return G
        G = gb(list(G.generators) + missing, ring, ambient.rank)
    return G


def theta_closure(ambient: Ambient, gens: Iterable[SuperPolynomial]) -> list[SuperPolynomial]:
    """C-module generators of the superideal spanned by gens (split into homogeneous parts)."""
    vectors = [g.to_vector() for g in homogeneous_split_gens(gens)]
    G = _closed_basis(ambient, vectors)
    return [SuperPolynomial.from_vector(ambient, g) for g in G.generators]


class RingPresentation:
    """A superring k[evens | odds] / (defining generators)."""

    def __init__(self, ambient: Ambient, defining: Iterable[SuperPolynomial] = (), name: str | None = None):
        check_odd(ambient.d)
        self.ambient = ambient
        self.name = name
        self.defining_input = tuple(defining)
        self.defining = tuple(homogeneous_split_gens(self.defining_input))
        self._cache = GBCache()
        self._module_gb = _closed_basis(ambient, [g.to_vector() for g in self.defining])
        if self._module_gb.contains(SuperPolynomial.one(ambient).to_vector()):
            raise TrivialRing(f"defining ideal of {ambient} contains 1")
        self._superreduced = None
        logger.info(f"ring {name or ''} = {self}: {len(self._module_gb)} module generators")

    # ambient access

    @property
    def field(self) -> Field:
        return self.ambient.field

    @property
    def C(self):
        return self.ambient.poly_ring

    @property
    def n(self) -> int:
        return self.ambient.n

    @property
    def d(self) -> int:
        return self.ambient.d

    @property
    def rank(self) -> int:
        return self.ambient.rank

    @property
    def module_gb(self) -> GroebnerBasis:
        return self._module_gb

    @property
    def is_free(self) -> bool:
        return not self._module_gb.generators

    def one(self) -> SuperPolynomial:
        return SuperPolynomial.one(self.ambient)

    def zero(self) -> SuperPolynomial:
        return SuperPolynomial.zero(self.ambient)

    def even(self, index: int) -> SuperPolynomial:
        return SuperPolynomial.even_variable(self.ambient, index)

    def theta(self, index: int) -> SuperPolynomial:
        return SuperPolynomial.odd_variable(self.ambient, index)

    def thetas(self) -> list[SuperPolynomial]:
        return [self.theta(i) for i in range(1, self.d + 1)]

    def constant(self, value) -> SuperPolynomial:
        return SuperPolynomial.constant(self.ambient, value)

    def from_even(self, poly) -> SuperPolynomial:
        return SuperPolynomial.from_even(self.ambient, poly)

    # quotient arithmetic

    def reduce(self, f: SuperPolynomial) -> SuperPolynomial:
        """Normal form of f modulo the defining ideal."""
        self.ambient.check(f.ambient)
        return SuperPolynomial.from_vector(self.ambient, self._module_gb.normal_form(f.to_vector()))

    def is_zero(self, f: SuperPolynomial) -> bool:
        return not self.reduce(f)

    def equal(self, f: SuperPolynomial, g: SuperPolynomial) -> bool:
        return self.is_zero(f - g)

    def mul(self, f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
        return self.reduce(f * g)

    # Groebner bases of superideals, memoized by content

    def closed_gb(self, gens: Sequence[SuperPolynomial]) -> GroebnerBasis:
        """theta-closed module GB of the superideal generated by gens plus a."""
        gens = homogeneous_split_gens(gens)
        key = content_key("closed", sorted(g.canonical_key() for g in gens))

        def compute():
            vectors = list(self._module_gb.generators) + [g.to_vector() for g in gens]
            return _closed_basis(self.ambient, vectors)

        return self._cache.get_or_compute(key, compute)

    # superreduction

    def superreduced_ideal(self) -> list:
        """Generators (a reduced GB) of c with R/J_R = C/c."""
        if self._superreduced is None:
            components = [g[0] for g in self._module_gb.generators if g[0]]
            self._superreduced = ideal_gb(components, self.C).polys()
        return list(self._superreduced)

    def superreduce(self) -> tuple:
        """(C, generators of c): the commutative presentation of R/J_R."""
        return self.C, self.superreduced_ideal()

    def canonical_superideal(self):
        from superring.superideal import SuperIdeal
        return SuperIdeal(self, self.thetas())

    def __str__(self):
        base = str(self.ambient)
        if not self.defining_input:
            return base
        return f"{base} / {format_generators(self.defining_input)}"


def make_ring(field: Field, even_vars: Sequence[str], odd_vars: Sequence[str],
              defining_gens: Iterable = (), name: str | None = None) -> RingPresentation:
    """Build a presented superring; defining_gens may be SuperPolynomials or callables of the ambient."""
    ambient = Ambient(field, tuple(even_vars), tuple(odd_vars))
    gens = [g(ambient) if callable(g) else g for g in defining_gens]
    return RingPresentation(ambient, gens, name=name)


def superreduce(R: RingPresentation) -> tuple:
    return R.superreduce()


def canonical_superideal(R: RingPresentation):
    return R.canonical_superideal()
