"""
First syzygies of ideal generators and of submodules of free modules.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

from sympy import QQ, Symbol
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement, PolyRing

from ..algebra.degrees import MultiDegree
from ..algebra.orders import PositionOverTermOrder
from ..algebra.polynomials import format_polynomial, polynomial_degree, with_order
from ..algebra.rings import CoxRing
from .engine import groebner, schreyer_syzygies
from .ideal import Ideal

logger = logging.getLogger(__name__)

Row = Dict[int, PolyElement]


@dataclass
class SyzygyModule:
    """Rows ``(a_1..a_m)`` with ``sum a_j g_j = 0``, stored sparsely as ``{j: a_j}``."""

    ring: CoxRing
    generators: List[PolyElement]
    column_degrees: List[MultiDegree]
    rows: List[Row]

    def __len__(self) -> int:
        return len(self.rows)

    def row_degree(self, row: Row) -> MultiDegree:
        j, a = next(iter(row.items()))
        return polynomial_degree(self.ring, a) + self.column_degrees[j]

    def check(self) -> bool:
        """Every row annihilates the generator vector."""
        R = self.ring.poly_ring()
        for row in self.rows:
            total = R.zero
            for j, a in row.items():
                total += with_order(a, R) * with_order(self.generators[j], R)
            if total:
                return False
        return True

    def as_matrix(self) -> List[List[str]]:
        return [[format_polynomial(row[j]) if j in row else "0" for j in range(len(self.generators))]
                for row in self.rows]


def syzygies(I: Ideal, order: Optional[MonomialOrder] = None) -> SyzygyModule:
    """Generators of the syzygy module of ``I.generators`` (in that order)."""
    R = I.poly_ring(order)
    gens = [with_order(g, R) for g in I.generators]
    if not gens:
        return SyzygyModule(I.ring, [], [], [])
    result = groebner(gens, I.ring.weights, track=True)
    rows = schreyer_syzygies(result)
    logger.debug("syzygies of %d generators: %d rows", len(gens), len(rows))
    return SyzygyModule(I.ring, gens, I.degrees(), rows)


def module_ring(ring: CoxRing, rank: int, order: Optional[MonomialOrder] = None) -> PolyRing:
    """Position variables e_0..e_{rank-1} in front of the ring variables."""
    base = order or ring.default_order()
    symbols = tuple(Symbol(f"_e{k}") for k in range(rank)) + ring.symbols
    return PolyRing(symbols, QQ, PositionOverTermOrder(rank, base))


def encode_row(row: Row, M: PolyRing, rank: int) -> PolyElement:
    out = {}
    for k, a in row.items():
        pos = tuple(1 if j == k else 0 for j in range(rank))
        for m, c in a.items():
            out[pos + m] = c
    return M.from_dict(out)


def module_syzygies(ring: CoxRing, rows: Sequence[Row], rank: int,
                    column_degrees: Sequence[MultiDegree]) -> List[Row]:
    """Syzygies of homogeneous vectors ``rows`` of the free module S^rank.

    Column k has degree ``column_degrees[k]``; the result is a list of sparse
    rows indexed by the positions of ``rows``.
    """
    if not rows:
        return []
    M = module_ring(ring, rank)
    weights = tuple(d.total() for d in column_degrees) + ring.weights
    vectors = [encode_row(row, M, rank) for row in rows]
    result = groebner(vectors, weights, rank=rank, track=True)
    out = schreyer_syzygies(result)
    R = ring.poly_ring()
    decoded = []
    for row in out:
        decoded.append({i: R.from_dict({m[rank:]: c for m, c in a.items()}) for i, a in row.items()})
    logger.debug("module syzygies of %d vectors in rank %d: %d rows", len(rows), rank, len(decoded))
    return decoded
