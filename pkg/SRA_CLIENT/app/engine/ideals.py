"""Ideal operations in the even polynomial ring C, built on the module Buchberger."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from sympy import Dummy
from sympy.polys.orderings import ProductOrder, grevlex
from sympy.polys.rings import PolyRing

from engine.groebner import GroebnerBasis, gb, preimage

logger = logging.getLogger(__name__)


def ideal_gb(polys: Iterable, ring, order=grevlex) -> GroebnerBasis:
    return gb([(f,) for f in polys], ring, 1, order)


def ideal_contains(G: GroebnerBasis, f) -> bool:
    return G.contains((f,))


def ideal_subset(polys: Iterable, G: GroebnerBasis) -> bool:
    return all(G.contains((f,)) for f in polys)


def ideal_equal(a: Sequence, b: Sequence, ring) -> bool:
    return ideal_subset(a, ideal_gb(b, ring)) and ideal_subset(b, ideal_gb(a, ring))


def is_unit_ideal(polys: Iterable, ring) -> bool:
    return ideal_gb(polys, ring).is_unit()


def _extended_ring(ring):
    """ring with one extra variable appended last; returns (ring', t)."""
    ext = PolyRing(ring.symbols + (Dummy("t"),), ring.domain, grevlex)
    return ext, ext.gens[-1]


def elimination_order(eliminated: Sequence[int], ngens: int):
    """Block order that makes every eliminated variable bigger than any kept one."""
    eliminated = tuple(eliminated)
    kept = tuple(i for i in range(ngens) if i not in eliminated)
    return ProductOrder(
        (grevlex, lambda m: tuple(m[i] for i in eliminated)),
        (grevlex, lambda m: tuple(m[i] for i in kept)),
    )


def eliminate(polys: Iterable, ring, variables: Iterable) -> list:
    """Generators of a intersected with k[remaining variables], as elements of ring.

    variables are generator indices or generators of ring.
    """
    indices = sorted({v if isinstance(v, int) else ring.gens.index(v) for v in variables})
    order = elimination_order(indices, ring.ngens)
    G = ideal_gb(polys, ring, order)
    return [g for g in G.polys()
            if all(m[i] == 0 for m in g.itermonoms() for i in indices)]


def ideal_intersect(a: Sequence, b: Sequence, ring) -> list:
    """a intersected with b via t*a + (1 - t)*b, eliminating t."""
    if not a or not b:
        return []
    ext, t = _extended_ring(ring)
    gens = [t * f.set_ring(ext) for f in a] + [(1 - t) * g.set_ring(ext) for g in b]
    return [h.set_ring(ring) for h in eliminate(gens, ext, [ext.ngens - 1])]


def ideal_colon(a: Sequence, g, ring) -> list:
    """{f : f*g in a}, from the syzygies of g against the generators of a."""
    if not g:
        return [ring.one]
    return [c[0] for c in preimage([(g,)], [(f,) for f in a], ring, 1)]


def ideal_colon_ideal(a: Sequence, b: Sequence, ring) -> list:
    """(a : b) as the intersection of the colons by each generator of b."""
    out = [ring.one]
    for g in b:
        out = ideal_intersect(out, ideal_colon(a, g, ring), ring)
    return out


def ideal_product(a: Sequence, b: Sequence) -> list:
    return [f * g for f in a for g in b]


def in_radical(f, a: Sequence, ring) -> bool:
    """Rabinowitsch test: f is in rad(a) iff 1 is in a + (1 - t*f)."""
    if not f:
        return True
    ext, t = _extended_ring(ring)
    gens = [g.set_ring(ext) for g in a] + [ext.one - t * f.set_ring(ext)]
    return ideal_gb(gens, ext).is_unit()


def independent_sets_dimension(leading: Sequence[tuple], ngens: int) -> int:
    """Largest set of variables containing the support of no leading monomial."""
    if not leading:
        return ngens
    support = np.array([[e > 0 for e in m] for m in leading], dtype=bool).reshape(len(leading), ngens)
    for size in range(ngens, -1, -1):
        for chosen in combinations(range(ngens), size):
            outside = np.ones(ngens, dtype=bool)
            outside[list(chosen)] = False
            # a monomial lies in k[chosen] iff it uses no variable outside
            if np.any(support & outside, axis=1).all():
                return size
    return 0


def krull_dim_quotient(a: Iterable, ring) -> int:
    """Kdim(C/a); -1 for the unit ideal."""
    G = ideal_gb(a, ring)
    if G.is_unit():
        return -1
    dim = independent_sets_dimension(G.leading_monomials(), ring.ngens)
    logger.debug(f"krull_dim_quotient: {len(G)} leading monomials, dimension {dim}")
    return dim


def evaluate_at(f, point: Sequence):
    """Value of f at a point given as domain elements, one per generator."""
    K = f.ring.domain
    total = K.zero
    for monom, coeff in f.iterterms():
        value = coeff
        for a, e in zip(point, monom):
            if e:
                value = value * a ** e
        total = total + value
    return total
