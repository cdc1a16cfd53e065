"""
Superpolynomials in even variables x_1..x_n and odd (Grassmann) variables
theta_1..theta_d over an exact field.

An element is stored by its Grassmann components: a mapping from odd mask
(bit i-1 set <=> theta_i present, indices ascending) to a commutative
polynomial in the even variables.  Products are signed by the inversion
count of the concatenated odd indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple

from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing

from algebra.fields import Field
from errors import AmbientMismatch

OddMask = int


def mask_from_indices(indices: Iterable[int]) -> OddMask:
    mask = 0
    for i in indices:
        mask |= 1 << (i - 1)
    return mask


def mask_indices(mask: OddMask) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_size(mask: OddMask) -> int:
    return mask.bit_count()


def odd_mul(a: OddMask, b: OddMask) -> tuple[int, OddMask] | None:
    """Multiply theta_a by theta_b; None when they share an index (theta^2 = 0)."""
    if a & b:
        return None
    inversions = 0
    for j in mask_indices(b):
        inversions += (a >> j).bit_count()
    return (-1 if inversions & 1 else 1), a | b


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


class Term(NamedTuple):
    coeff: object
    even_exps: tuple[int, ...]
    odd: OddMask


@dataclass(frozen=True)
class Ambient:
    """Variable lists and base field shared by every element of a ring."""

    field: Field
    evens: tuple[str, ...] = ()
    odds: tuple[str, ...] = ()

    @cached_property
    def poly_ring(self) -> PolyRing:
        return PolyRing(",".join(self.evens), self.field.domain, grevlex)

    @property
    def n(self) -> int:
        return len(self.evens)

    @property
    def d(self) -> int:
        return len(self.odds)

    @property
    def rank(self) -> int:
        return 1 << self.d

    def check(self, other: "Ambient"):
        if self != other:
            raise AmbientMismatch(f"ambient mismatch: {self} vs {other}")

    def __str__(self):
        variables = ", ".join(self.evens)
        if self.odds:
            variables += " | " + ", ".join(self.odds)
        return f"{self.field.name}[{variables}]"


class SuperPolynomial:
    """Immutable element of k[x | theta] in canonical component form."""

    __slots__ = ("ambient", "_components", "_hash")

    def __init__(self, ambient: Ambient, components=None):
        self.ambient = ambient
        ring = ambient.poly_ring
        clean = {}
        for mask, poly in (components or {}).items():
            if poly:
                clean[mask] = ring.ring_new(poly) if poly.ring != ring else poly
        self._components = dict(sorted(clean.items()))
        self._hash = None

    # construction

    @classmethod
    def zero(cls, ambient: Ambient) -> "SuperPolynomial":
        return cls(ambient)

    @classmethod
    def constant(cls, ambient: Ambient, value) -> "SuperPolynomial":
        ring = ambient.poly_ring
        return cls(ambient, {0: ring.ground_new(ambient.field.scalar(value))})

    @classmethod
    def one(cls, ambient: Ambient) -> "SuperPolynomial":
        return cls.constant(ambient, 1)

    @classmethod
    def even_variable(cls, ambient: Ambient, index: int) -> "SuperPolynomial":
        return cls(ambient, {0: ambient.poly_ring.gens[index]})

    @classmethod
    def odd_variable(cls, ambient: Ambient, index: int) -> "SuperPolynomial":
        """theta_index, 1-based."""
        return cls(ambient, {1 << (index - 1): ambient.poly_ring.one})

    @classmethod
    def odd_monomial(cls, ambient: Ambient, mask: OddMask) -> "SuperPolynomial":
        return cls(ambient, {mask: ambient.poly_ring.one})

    @classmethod
    def from_even(cls, ambient: Ambient, poly) -> "SuperPolynomial":
        return cls(ambient, {0: poly})

    @classmethod
    def from_terms(cls, ambient: Ambient, terms: Iterable[Term]) -> "SuperPolynomial":
        ring = ambient.poly_ring
        acc = {}
        for coeff, exps, mask in terms:
            acc[mask] = acc.get(mask, ring.zero) + ring.term_new(tuple(exps), ambient.field.scalar(coeff))
        return cls(ambient, acc)

    # views

    def grassmann_components(self) -> dict:
        return dict(self._components)

    def component(self, mask: OddMask):
        return self._components.get(mask, self.ambient.poly_ring.zero)

    def masks(self) -> tuple[OddMask, ...]:
        return tuple(self._components)

    def terms(self) -> list[Term]:
        """Terms in descending monomial order: grevlex on evens, then odd bit pattern."""
        out = [Term(c, m, mask) for mask, poly in self._components.items() for m, c in poly.iterterms()]
        out.sort(key=lambda t: (grevlex(t.even_exps), t.odd), reverse=True)
        return out

    @property
    def is_zero(self) -> bool:
        return not self._components

    def __bool__(self):
        return bool(self._components)

    def is_even_only(self) -> bool:
        """True when the element has no odd variables at all (lies in C)."""
        return set(self._components) <= {0}

    def degree(self) -> int:
        """Total degree counting odd variables with weight one; -1 for zero."""
        if not self._components:
            return -1
        return max(sum(m) + mask_size(mask) for mask, p in self._components.items() for m in p.itermonoms())

    def parity(self) -> Parity:
        parities = {mask_size(mask) & 1 for mask in self._components}
        if parities == {1}:
            return Parity.ODD
        if len(parities) > 1:
            return Parity.MIXED
        return Parity.EVEN

    def is_homogeneous(self) -> bool:
        return self.parity() is not Parity.MIXED

    def homogeneous_split(self) -> tuple["SuperPolynomial", "SuperPolynomial"]:
        even = {m: p for m, p in self._components.items() if not mask_size(m) & 1}
        odd = {m: p for m, p in self._components.items() if mask_size(m) & 1}
        return SuperPolynomial(self.ambient, even), SuperPolynomial(self.ambient, odd)

    # arithmetic

    def _coerce(self, other) -> "SuperPolynomial":
        if isinstance(other, SuperPolynomial):
            self.ambient.check(other.ambient)
            return other
        return SuperPolynomial.constant(self.ambient, other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._components)
        for mask, poly in other._components.items():
            acc[mask] = acc[mask] + poly if mask in acc else poly
        return SuperPolynomial(self.ambient, acc)

    __radd__ = __add__

    def __neg__(self):
        return SuperPolynomial(self.ambient, {m: -p for m, p in self._components.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        ring = self.ambient.poly_ring
        acc = {}
        for a_mask, a in self._components.items():
            for b_mask, b in other._components.items():
                product = odd_mul(a_mask, b_mask)
                if product is None:
                    continue
                sign, mask = product
                term = a * b if sign > 0 else -(a * b)
                acc[mask] = acc.get(mask, ring.zero) + term
        return SuperPolynomial(self.ambient, acc)

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = SuperPolynomial.one(self.ambient)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, c) -> "SuperPolynomial":
        c = self.ambient.field.scalar(c)
        return SuperPolynomial(self.ambient, {m: p.mul_ground(c) for m, p in self._components.items()})

    def map_components(self, fn) -> "SuperPolynomial":
        return SuperPolynomial(self.ambient, {m: fn(p) for m, p in self._components.items()})

    def monic(self) -> "SuperPolynomial":
        """Divide by the coefficient of the leading term; zero stays zero."""
        if not self._components:
            return self
        lead = self.terms()[0].coeff
        return self.map_components(lambda p: p.quo_ground(lead))

    # module encoding

    def to_vector(self) -> tuple:
        ring = self.ambient.poly_ring
        return tuple(self._components.get(mask, ring.zero) for mask in range(self.ambient.rank))

    @classmethod
    def from_vector(cls, ambient: Ambient, vector) -> "SuperPolynomial":
        return cls(ambient, {mask: p for mask, p in enumerate(vector) if p})

    # identity

    def canonical_key(self) -> tuple:
        return tuple((mask, tuple(sorted(p.items()))) for mask, p in self._components.items())

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            try:
                other = self._coerce(other)
            except Exception:
                return NotImplemented
        return self.ambient == other.ambient and self._components == other._components

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, self.canonical_key()))
        return self._hash

    def __str__(self):
        from frontend.printer import format_superpolynomial
        return format_superpolynomial(self)

    def __repr__(self):
        return f"SuperPolynomial({self})"


def spoly_add(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    return f + g


def spoly_mul(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    return f * g


def parity_of(f: SuperPolynomial) -> Parity:
    return f.parity()


def homogeneous_split(f: SuperPolynomial) -> tuple[SuperPolynomial, SuperPolynomial]:
    return f.homogeneous_split()


def grassmann_components(f: SuperPolynomial) -> dict:
    return f.grassmann_components()


def reassemble(ambient: Ambient, components: dict) -> SuperPolynomial:
    return SuperPolynomial(ambient, components)
