"""Krull superdimension: even part from R/J_R, odd part from annihilators of odd products."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from algebra.grassmann import SuperPolynomial
from engine.ideals import krull_dim_quotient
from superring.ring import RingPresentation
from superring.superideal import annihilator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuperDimension:
    even: int
    odd: int

    def __str__(self):
        return f"{self.even}|{self.odd}"


@dataclass(frozen=True)
class OddParameterWitness:
    indices: tuple[int, ...]       # 1-based positions in the odd generator list
    annihilator: tuple             # generators of the reduced even annihilator in C


def even_ksdim(R: RingPresentation) -> int:
    return krull_dim_quotient(R.superreduced_ideal(), R.C)


def ann_even(R: RingPresentation, g: SuperPolynomial) -> list:
    """C-ideal whose quotient has the Krull dimension of R0 / Ann_R0(g)."""
    if R.is_zero(g):
        return [R.C.one]
    return annihilator(g, R).even_projection()


def odd_ksdim(R: RingPresentation, odd_generators: Sequence[SuperPolynomial] | None = None):
    """(length of the longest system of odd parameters, witness or None)."""
    gens = list(odd_generators) if odd_generators is not None else R.thetas()
    if not gens:
        return 0, None
    target = even_ksdim(R)
    for size in range(len(gens), 0, -1):
        for subset in combinations(range(len(gens)), size):
            product = R.one()
            for i in subset:
                product = product * gens[i]
            ann = ann_even(R, product)
            dim = krull_dim_quotient(ann, R.C)
            logger.debug(f"odd_ksdim: subset {subset} annihilator dimension {dim}")
            if dim == target:
                return size, OddParameterWitness(tuple(i + 1 for i in subset), tuple(ann))
    return 0, None


def ksdim(R: RingPresentation) -> SuperDimension:
    odd, _ = odd_ksdim(R)
    return SuperDimension(even_ksdim(R), odd)
