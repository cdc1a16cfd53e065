"""
Buchberger's algorithm for ideals of C = k[x_1..x_n] and for submodules of
free modules C^r.

A module vector is a tuple of sympy PolyElements of one ring.  Terms are
compared position-over-term: the higher position wins, and inside a
position the monomial order decides (grevlex unless a ProductOrder is
passed for elimination).  Rank 1 is the ideal case.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy.polys.orderings import grevlex

from engine.limits import check_degree, check_time
from errors import AmbientMismatch

logger = logging.getLogger(__name__)

Vector = tuple


def leading_term(v: Sequence, order=grevlex):
    """Return (position, monomial, coefficient) of the leading term, or None for zero."""
    for pos in range(len(v) - 1, -1, -1):
        f = v[pos]
        if f:
            m = max(f.itermonoms(), key=order)
            return pos, m, f[m]
    return None


def vector_degree(v: Sequence) -> int:
    return max((sum(m) for f in v for m in f.itermonoms()), default=-1)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


def monic(v: Sequence, order=grevlex) -> Vector:
    lt = leading_term(v, order)
    if lt is None:
        return tuple(v)
    c = lt[2]
    return tuple(f.quo_ground(c) if f else f for f in v)


def _reduce(v: Sequence, basis, leads, ring, order) -> Vector:
    """Full reduction of v by monic vectors basis whose leading (pos, monom) are leads."""
    div = ring.monomial_div
    v = list(v)
    rest = [ring.zero] * len(v)
    while True:
        lt = leading_term(v, order)
        if lt is None:
            return tuple(rest)
        pos, m, c = lt
        for g, (gpos, gm) in zip(basis, leads):
            if gpos != pos:
                continue
            q = div(m, gm)
            if q is None:
                continue
            for k, gk in enumerate(g):
                if gk:
                    v[k] = v[k] - gk.mul_term((q, c))
            break
        else:
            term = ring.term_new(m, c)
            rest[pos] = rest[pos] + term
            v[pos] = v[pos] - term


def _spair(f, g, lmf, lmg, ring) -> Vector:
    L = ring.monomial_lcm(lmf, lmg)
    qf = ring.monomial_div(L, lmf)
    qg = ring.monomial_div(L, lmg)
    return tuple(a.mul_monom(qf) - b.mul_monom(qg) for a, b in zip(f, g))


def _update(G, leads, P, f, ring, order, ideal_case):
    """Add f to G and update the pair set with the Gebauer-Moller criteria.

    Only pairs sharing a leading position are ever formed.  The product
    criterion is applied in the ideal case only; it is unsound for modules.
    """
    pos_f, lm_f = leading_term(f, order)[:2]
    lcm = ring.monomial_lcm
    mul = ring.monomial_mul
    div = ring.monomial_div
    k = len(G)

    def keep(p):
        i, j = p
        if leads[i][0] != pos_f:
            return True
        L = lcm(leads[i][1], leads[j][1])
        return (div(L, lm_f) is None
                or L == lcm(leads[i][1], lm_f)
                or L == lcm(leads[j][1], lm_f))

    P = {p for p in P if keep(p)}

    lcm_dict = {}
    for i in range(k):
        if leads[i][0] == pos_f:
            lcm_dict.setdefault(lcm(leads[i][1], lm_f), []).append(i)
    minimal = []
    for L in sorted(lcm_dict, key=order):
        if all(div(L, L_) is None for L_ in minimal):
            minimal.append(L)
    new_pairs = set()
    for L in minimal:
        members = lcm_dict[L]
        if ideal_case and any(lcm(leads[i][1], lm_f) == mul(leads[i][1], lm_f) for i in members):
            continue
        new_pairs.add((min(members), k))

    return G + [f], leads + [(pos_f, lm_f)], P | new_pairs


def _minimalize(G, leads, ring, order):
    div = ring.monomial_div
    ranked = sorted(zip(G, leads), key=lambda gl: (gl[1][0], order(gl[1][1])))
    out, out_leads = [], []
    for g, (pos, lm) in ranked:
        if all(p != pos or div(lm, m) is None for p, m in out_leads):
            out.append(g)
            out_leads.append((pos, lm))
    return out, out_leads


def _interreduce(G, leads, ring, order):
    out = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        other_leads = leads[:i] + leads[i + 1:]
        out.append(monic(_reduce(g, others, other_leads, ring, order), order))
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced, monic Groebner basis of a submodule of C^rank."""

    ring: object
    rank: int
    order: object
    generators: tuple
    leads: tuple

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        """True for the unit ideal (rank 1 with a constant generator)."""
        one = self.ring.zero_monom
        return self.rank == 1 and any(lm == one for _, lm in self.leads)

    def normal_form(self, v: Sequence) -> Vector:
        if len(v) != self.rank:
            raise AmbientMismatch(f"rank mismatch: vector of length {len(v)} against rank {self.rank}")
        return _reduce(v, self.generators, self.leads, self.ring, self.order)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vector(self.normal_form(v))

    def polys(self) -> list:
        """Generators of a rank-1 basis as plain polynomials."""
        return [g[0] for g in self.generators]

    def leading_monomials(self, position=None) -> list:
        return [lm for pos, lm in self.leads if position is None or pos == position]


def gb(generators: Iterable[Sequence], ring, rank: int | None = None, order=grevlex) -> GroebnerBasis:
    """Reduced Groebner basis of the submodule spanned by generators."""
    F = [tuple(v) for v in generators]
    if rank is None:
        rank = len(F[0]) if F else 1
    if any(len(v) != rank for v in F):
        raise AmbientMismatch(f"generators of mixed rank (expected {rank})")
    F = [monic(v, order) for v in F if not is_zero_vector(v)]
    ideal_case = rank == 1

    G, leads, P = [], [], set()
    for f in F:
        check_degree(vector_degree(f))
        G, leads, P = _update(G, leads, P, f, ring, order, ideal_case)

    lcm = ring.monomial_lcm
    reductions = 0
    while P:
        check_time()
        i, j = min(P, key=lambda p: (order(lcm(leads[p[0]][1], leads[p[1]][1])), p))
        P.remove((i, j))
        s = _spair(G[i], G[j], leads[i][1], leads[j][1], ring)
        r = _reduce(s, G, leads, ring, order)
        reductions += 1
        if not is_zero_vector(r):
            r = monic(r, order)
            check_degree(vector_degree(r))
            G, leads, P = _update(G, leads, P, r, ring, order, ideal_case)

    G, leads = _minimalize(G, leads, ring, order)
    G = _interreduce(G, leads, ring, order)
    logger.debug(f"gb: rank {rank}, {len(F)} inputs, {reductions} pairs reduced, {len(G)} elements")
    return GroebnerBasis(ring, rank, order, tuple(G), tuple(leads))


def normal_form(v: Sequence, G: GroebnerBasis) -> Vector:
    return G.normal_form(v)


def _unit_vector(ring, length, index):
    return tuple(ring.one if k == index else ring.zero for k in range(length))


def syzygies(vectors: Sequence[Sequence], ring, rank: int | None = None) -> list:
    """Generators of {(c_1..c_m) : sum c_i v_i = 0}.

    Each v_i is extended by the unit vector e_i in positions below the
    original ones; a Groebner basis of the extended vectors under
    position-over-term keeps the v-part dominant, so the elements whose
    leading position falls in the e-block have zero v-part.
    """
    m = len(vectors)
    if m == 0:
        return []
    if rank is None:
        rank = len(vectors[0])
    extended = [_unit_vector(ring, m, i) + tuple(v) for i, v in enumerate(vectors)]
    G = gb(extended, ring, m + rank)
    return [g[:m] for g, (pos, _) in zip(G.generators, G.leads) if pos < m]


def low_block(vectors: Sequence[Sequence], keep: int, ring, rank: int) -> list:
    """Generators of span(vectors) intersected with the first keep coordinates."""
    G = gb(vectors, ring, rank)
    return [g[:keep] for g, (pos, _) in zip(G.generators, G.leads) if pos < keep]


def module_intersection(A: Sequence[Sequence], B: Sequence[Sequence], ring, rank: int) -> list:
    """Generators of span(A) intersected with span(B) inside C^rank."""
    zero = (ring.zero,) * rank
    stacked = [tuple(a) + tuple(a) for a in A] + [zero + tuple(b) for b in B]
    if not stacked:
        return []
    return low_block(stacked, rank, ring, 2 * rank)


def preimage(columns: Sequence[Sequence], target: Sequence[Sequence], ring, rank: int) -> list:
    """Generators of {c in C^m : sum c_k columns_k lies in span(target)}."""
    m = len(columns)
    if m == 0:
        return []
    syz = syzygies([tuple(c) for c in columns] + [tuple(t) for t in target], ring, rank)
    return [s[:m] for s in syz if not is_zero_vector(s[:m])]
