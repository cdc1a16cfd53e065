"""Formal derivatives, Jacobian minors and the Jacobian ideal."""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Sequence

from sympy.polys.matrices import DomainMatrix

from engine.ideals import evaluate_at, krull_dim_quotient

logger = logging.getLogger(__name__)


def partial_derivative(f, index: int):
    return f.diff(f.ring.gens[index])


def jacobian_matrix(polys: Sequence, ring) -> list:
    return [[partial_derivative(f, i) for i in range(ring.ngens)] for f in polys]


def _minors(rows: list, size: int, domain) -> list:
    if size == 0:
        return [domain.one]
    out = []
    for r in combinations(range(len(rows)), size):
        for c in combinations(range(len(rows[0])), size):
            block = [[rows[i][j] for j in c] for i in r]
            det = DomainMatrix(block, (size, size), domain).det()
            if det:
                out.append(det)
    return out


def jacobian_ideal(polys: Sequence, ring) -> list:
    """The ideal a + (h x h minors of the Jacobian), h the codimension of a."""
    polys = [f for f in polys if f]
    dim = krull_dim_quotient(polys, ring)
    if dim < 0:
        return [ring.one]
    h = ring.ngens - dim
    if h > len(polys):
        # fewer generators than the codimension: no h x h minor exists
        return list(polys)
    minors = _minors(jacobian_matrix(polys, ring), h, ring.to_domain()) if polys else [ring.one]
    logger.debug(f"jacobian_ideal: codimension {h}, {len(minors)} nonzero minors")
    return list(polys) + [ring.ring_new(m) for m in minors]


def jacobian_rank_at(polys: Sequence, ring, point: Sequence) -> int:
    """Rank over the base field of the Jacobian matrix evaluated at a rational point."""
    polys = [f for f in polys if f]
    if not polys or ring.ngens == 0:
        return 0
    K = ring.domain
    values = [[evaluate_at(d, point) for d in row] for row in jacobian_matrix(polys, ring)]
    return DomainMatrix(values, (len(polys), ring.ngens), K).rank()
