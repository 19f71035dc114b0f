"""
Lifting an ideal I_X with Hilbert function h_{r,X} to an ideal on X x Y with
Hilbert function h_{r,X x Y} that restricts back to I_X.

The lift J is defined degree by degree. Degrees (D, E) fall into three
classes: A when h_{r,X}(D) = r, B when h_{r,X}(D) < r = h_{r,XxY}(D, E), and
C otherwise. Monomials of S[X x Y] are compared on the Y part first, then on
the X part.
"""
import logging
import threading
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement

from .. import linalg
from ..algebra.degrees import DegreeBox, MultiDegree, join_all
from ..algebra.orders import BlockOrder
from ..algebra.rings import CoxRing, product_of_projective_spaces
from ..errors import PreconditionError
from ..groebner.ideal import Ideal
from ..hilbert import h_target, hf_matches_target

logger = logging.getLogger(__name__)

A, B, C = "A", "B", "C"


class ProductLift:
    """Lazy degree -> basis oracle for the lift of ``ideal_x`` to X x Y."""

    def __init__(self, ideal_x: Ideal, ring_y: CoxRing, r: int,
                 order_x: Optional[MonomialOrder] = None, order_y: Optional[MonomialOrder] = None,
                 aliases: Optional[Sequence[str]] = None, check: bool = True):
        ring_x = ideal_x.ring
        if not (ring_x.is_product and ring_y.is_product):
            raise PreconditionError("product lifts are built for products of projective spaces")
        if check:
            report = hf_matches_target(ideal_x, r)
            if not report.ok:
                raise PreconditionError(f"H_(S/I_X) differs from h_{r} at {report.first_failure}")
        self.ideal_x = ideal_x
        self.ring_x = ring_x
        self.ring_y = ring_y
        self.r = r
        if aliases is None:
            names_x = [v.alias for v in ring_x.variables]
            names_y = [v.alias for v in ring_y.variables]
            if all(names_x) and all(names_y) and not set(names_x) & set(names_y):
                aliases = names_x + names_y
        self.ring = product_of_projective_spaces(ring_x.ns + ring_y.ns, aliases)
        self.nx = ring_x.nvars
        self.px = ring_x.pic_rank
        self.order_x = order_x or ring_x.default_order()
        self.order_y = order_y or ring_y.default_order()
        x_idx = tuple(range(self.nx))
        y_idx = tuple(range(self.nx, self.ring.nvars))
        self.order = BlockOrder([(y_idx, self.order_y), (x_idx, self.order_x)])
        self._pieces: Dict[MultiDegree, Tuple[PolyElement, ...]] = {}
        self._lock = threading.Lock()

    def split(self, degree) -> Tuple[MultiDegree, MultiDegree]:
        degree = self.ring.degree(degree)
        return MultiDegree(degree.coords[: self.px]), MultiDegree(degree.coords[self.px:])

    def classify(self, degree) -> str:
        d, _ = self.split(degree)
        if h_target(self.ring_x, self.r, d) == self.r:
            return A
        if h_target(self.ring, self.r, degree) == self.r:
            return B
        return C

    def piece(self, degree) -> Tuple[PolyElement, ...]:
        """A basis of J_(D,E), memoized per degree."""
        degree = self.ring.degree(degree)
        cached = self._pieces.get(degree)
        if cached is not None:
            return cached
        basis = tuple(self._compute_piece(degree))
        with self._lock:
            return self._pieces.setdefault(degree, basis)

    def _compute_piece(self, degree: MultiDegree) -> List[PolyElement]:
        R = self.ring.poly_ring()
        one = QQ.one
        kind = self.classify(degree)
        if kind == C:
            return []
        if kind == B:
            monomials = self.ring.monomials_of_degree(degree, self.order)
            return [R({m: one}) for m in monomials[: len(monomials) - self.r]]
        d, e = self.split(degree)
        ys = self.ring_y.monomials_of_degree(e, self.order_y)
        xs = self.ring_x.monomials_of_degree(d, self.order_x)
        out = [R({x + y: one}) for y in ys[:-1] for x in xs]
        y_min = ys[-1]
        for g in self.ideal_x.graded_piece(d, self.order_x):
            out.append(R.from_dict({m + y_min: c for m, c in g.items()}))
        return out

    def default_box(self) -> DegreeBox:
        top = join_all(self.ideal_x.degrees(), self.px)
        upper_x = [max(self.r, c) for c in top]
        upper_y = [self.r + 1] * self.ring_y.pic_rank
        return DegreeBox.up_to(upper_x + upper_y)

    def harvest(self, box: Optional[DegreeBox] = None) -> Ideal:
        """The ideal generated by the pieces in ``box``.

        Lower degrees are visited first; a piece only contributes elements
        that the products of variables with earlier pieces do not span.
        """
        box = box or self.default_box()
        ring = self.ring
        generators = []
        for degree in box:
            basis = self.piece(degree)
            if not basis:
                continue
            index = {m: j for j, m in enumerate(ring.monomials_of_degree(degree))}
            spanned = []
            for i, var in enumerate(ring.variables):
                lower = degree - var.degree
                if not lower.is_nonnegative() or lower not in box:
                    continue
                x = ring.poly_ring().gens[i]
                spanned.extend(_vector(x * g, index) for g in self.piece(lower))
            rows, _ = linalg.rref_rows(spanned, len(index))
            for g in basis:
                v = _vector(g, index)
                if not linalg.in_span(rows, v, len(index)):
                    generators.append(g)
                    rows, _ = linalg.rref_rows(rows + [v], len(index))
        logger.info("product lift harvest on %s: %d generators", box.upper, len(generators))
        return Ideal(ring, generators, check=False)

    def check_closure(self, box: Optional[DegreeBox] = None) -> bool:
        """x * J_D lies in J_(D + deg x) for every variable and every D with both degrees in ``box``."""
        box = box or self.default_box()
        ring = self.ring
        for degree in box:
            basis = self.piece(degree)
            for i, var in enumerate(ring.variables):
                upper = degree + var.degree
                if upper not in box:
                    continue
                index = {m: j for j, m in enumerate(ring.monomials_of_degree(upper))}
                target = [_vector(g, index) for g in self.piece(upper)]
                x = ring.poly_ring().gens[i]
                for g in basis:
                    if not linalg.in_span(target, _vector(x * g, index), len(index)):
                        return False
        return True

    def hf(self, degree) -> int:
        return self.ring.dim_graded_piece(degree) - len(self.piece(degree))


def _vector(f: PolyElement, index) -> Dict[int, object]:
    return {index[m]: c for m, c in f.items()}


def product_lift(ideal_x: Ideal, ring_y: CoxRing, r: int, order_x: Optional[MonomialOrder] = None,
                 order_y: Optional[MonomialOrder] = None) -> ProductLift:
    return ProductLift(ideal_x, ring_y, r, order_x, order_y)
