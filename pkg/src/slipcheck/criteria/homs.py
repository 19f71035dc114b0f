"""
Degree-zero Hom and Ext^1 dimensions from presentations.

Every map is linear algebra over QQ on standard monomials of S/N: an element
of (S/N)_D is a coordinate vector over the monomials of degree D outside the
initial ideal of N, and products are reduced with the cached normal forms.
"""
import logging
from typing import Dict, List, Sequence, Tuple

from sympy import QQ

from .. import linalg
from ..algebra.degrees import MultiDegree
from ..algebra.polynomials import polynomial_degree, with_order
from ..algebra.rings import Monomial
from ..errors import PreconditionError
from ..groebner.engine import groebner, lift, schreyer_syzygies
from ..groebner.ideal import Ideal
from ..groebner.syzygies import Row, module_syzygies, syzygies

logger = logging.getLogger(__name__)


class Quotient:
    """S/N with cached standard-monomial bases and normal forms."""

    def __init__(self, N: Ideal):
        self.N = N
        self.R = N.poly_ring()
        self.basis = N.groebner_basis()
        self._standard: Dict[MultiDegree, Tuple[Monomial, ...]] = {}
        self._index: Dict[MultiDegree, Dict[Monomial, int]] = {}
        self._nf: Dict[Monomial, Dict[Monomial, object]] = {}

    def standard(self, degree: MultiDegree) -> Tuple[Monomial, ...]:
        cached = self._standard.get(degree)
        if cached is None:
            cached = tuple(self.N.standard_monomials(degree))
            self._standard.setdefault(degree, cached)
            self._index.setdefault(degree, {m: j for j, m in enumerate(cached)})
        return cached

    def index(self, degree: MultiDegree) -> Dict[Monomial, int]:
        self.standard(degree)
        return self._index[degree]

    def nf_monomial(self, m: Monomial) -> Dict[Monomial, object]:
        cached = self._nf.get(m)
        if cached is None:
            f = self.R({m: QQ.one})
            if self.basis:
                f = f.rem(list(self.basis))
            cached = dict(f)
            self._nf.setdefault(m, cached)
        return cached


def _row_degree(ring, row: Row, column_degrees: Sequence[MultiDegree]) -> MultiDegree:
    j, a = next(iter(row.items()))
    return polynomial_degree(ring, a) + column_degrees[j]


def hom_map_rank(Q: Quotient, column_degrees: Sequence[MultiDegree], relations: Sequence[Row]) -> Tuple[int, int]:
    """(number of unknowns, rank) of Hom(F, S/N)_0 -> Hom(G, S/N)_0 induced by ``relations``.

    F has one generator per column degree; each relation row gives one
    generator of G and the map sends phi to (sum_j a_j phi_j)_rows.
    """
    ring = Q.N.ring
    monomial_mul = Q.R.monomial_mul
    offsets = []
    total = 0
    for d in column_degrees:
        offsets.append(total)
        total += len(Q.standard(d))
    if total == 0:
        return 0, 0

    # one matrix row per unknown (column j, standard monomial s); columns are (relation, target monomial)
    images: List[Dict[int, object]] = [dict() for _ in range(total)]
    col_base = 0
    for row in relations:
        row = {j: with_order(a, Q.R) for j, a in row.items() if a}
        if not row:
            continue
        degree = _row_degree(ring, row, column_degrees)
        target = Q.index(degree)
        for j, a in row.items():
            for k, s in enumerate(Q.standard(column_degrees[j])):
                image = images[offsets[j] + k]
                for m, c in a.items():
                    for t, v in Q.nf_monomial(monomial_mul(m, s)).items():
                        col = col_base + target[t]
                        w = image.get(col, QQ.zero) + c * v
                        if w:
                            image[col] = w
                        else:
                            image.pop(col, None)
        col_base += len(target)
    return total, linalg.rank(images, col_base)


def hom_dim_degree_zero(J: Ideal) -> int:
    """dim Hom_S(J, S/J)_0 from the syzygies of the generators of J."""
    if J.is_zero():
        return 0
    syz = syzygies(J)
    Q = Quotient(J)
    unknowns, rank = hom_map_rank(Q, syz.column_degrees, syz.rows)
    logger.debug("Hom(J, S/J)_0: %d unknowns, %d syzygies, rank %d", unknowns, len(syz), rank)
    return unknowns - rank


def ext1_dim_degree_zero(I: Ideal, J: Ideal) -> int:
    """dim Ext^1_S(J/I, S/J)_0 for I contained in J.

    J/I is presented by the generators f of J, the syzygies of f together
    with rows expressing each generator of I in f, and the syzygies of
    those rows.
    """
    if not J.contains(I):
        raise PreconditionError("Ext^1(J/I, S/J) needs I contained in J")
    if J.is_zero():
        return 0
    ring = J.ring
    R = J.poly_ring()
    f = [with_order(g, R) for g in J.generators]
    degrees = J.degrees()
    tracked = groebner(f, ring.weights, track=True)
    relations: List[Row] = schreyer_syzygies(tracked)
    for g in I.generators:
        row = lift(tracked, with_order(g, R))
        if row is None:
            raise PreconditionError("generator of I is not in J")
        if row:
            relations.append(row)
    rel_degrees = [_row_degree(ring, row, degrees) for row in relations]
    second = module_syzygies(ring, relations, len(f), degrees)

    Q = Quotient(J)
    n0, rank0 = hom_map_rank(Q, degrees, relations)
    n1, rank1 = hom_map_rank(Q, rel_degrees, second)
    logger.debug("Ext^1: Hom(F0)=%d, Hom(F1)=%d, rank d0=%d, rank d1=%d", n0, n1, rank0, rank1)
    return n1 - rank1 - rank0
