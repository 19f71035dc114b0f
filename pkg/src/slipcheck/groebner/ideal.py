"""
Homogeneous ideals of a Cox ring with a per-order Groebner basis memo.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement, PolyRing

from ..algebra.degrees import DegreeLike, MultiDegree
from ..algebra.polynomials import format_polynomial, parse_polynomial, polynomial_degree, with_order
from ..algebra.rings import CoxRing, Monomial
from ..errors import RingMismatchError
from .engine import groebner, normal_form, reduce_basis

logger = logging.getLogger(__name__)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimal_monomials(monomials: Iterable[Monomial]) -> List[Monomial]:
    """Minimal elements under divisibility, duplicates removed, in input order."""
    unique = list(dict.fromkeys(tuple(m) for m in monomials))
    by_size = sorted(unique, key=sum)
    kept = []
    for m in by_size:
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    keep = set(kept)
    return [m for m in unique if m in keep]


class Ideal:
    """An ideal of ``ring`` given by homogeneous generators.

    Generators are stored in the ring's default (grevlex) ``PolyRing``; zero
    generators are dropped. Reduced Groebner bases are memoized per monomial
    order; filling the memo twice is harmless.
    """

    def __init__(self, ring: CoxRing, generators: Iterable[PolyElement] = (), check: bool = True):
        self.ring = ring
        R = ring.poly_ring()
        gens = []
        for g in generators:
            if g.ring.symbols != R.symbols:
                raise RingMismatchError(f"generator {format_polynomial(g)} does not live in {ring}")
            g = with_order(g, R)
            if not g:
                continue
            if check:
                polynomial_degree(ring, g)
            gens.append(g)
        self.generators: Tuple[PolyElement, ...] = tuple(gens)
        self._gb: Dict[MonomialOrder, Tuple[PolyElement, ...]] = {}

    @classmethod
    def from_strings(cls, ring: CoxRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [parse_polynomial(ring, t) for t in texts])

    @classmethod
    def from_monomials(cls, ring: CoxRing, monomials: Iterable[Monomial]) -> "Ideal":
        R = ring.poly_ring()
        return cls(ring, [R({tuple(m): R.domain.one}) for m in monomials], check=False)

    @classmethod
    def unit(cls, ring: CoxRing) -> "Ideal":
        return cls(ring, [ring.poly_ring().one])

    # -- basic queries -------------------------------------------------------
    def poly_ring(self, order: Optional[MonomialOrder] = None) -> PolyRing:
        return self.ring.poly_ring(order)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Ideal({self.ring}, [{', '.join(self.to_strings())}])"

    def to_strings(self) -> List[str]:
        return [format_polynomial(g) for g in self.generators]

    def is_zero(self) -> bool:
        return not self.generators

    def is_monomial(self) -> bool:
        return all(len(g) == 1 for g in self.generators)

    def is_unit(self) -> bool:
        return any(g.is_ground for g in self.groebner_basis())

    def degrees(self) -> List[MultiDegree]:
        return [polynomial_degree(self.ring, g) for g in self.generators]

    # -- Groebner bases ------------------------------------------------------
    def groebner_basis(self, order: Optional[MonomialOrder] = None) -> Tuple[PolyElement, ...]:
        """The reduced Groebner basis under ``order`` (default: the ring's grevlex)."""
        R = self.poly_ring(order)
        key = R.order
        cached = self._gb.get(key)
        if cached is not None:
            return cached
        if not self.generators:
            basis: Tuple[PolyElement, ...] = ()
        elif self.is_monomial():
            mins = minimal_monomials(g.LM for g in self.generators)
            basis = tuple(sorted((R({m: R.domain.one}) for m in mins), key=lambda g: key(g.LM), reverse=True))
        else:
            gens = [with_order(g, R) for g in self.generators]
            basis = tuple(reduce_basis(groebner(gens, self.ring.weights).basis))
        logger.debug("reduced groebner basis of %d generators under %s: %d elements",
                     len(self.generators), key, len(basis))
        return self._gb.setdefault(key, basis)

    def leading_monomials(self, order: Optional[MonomialOrder] = None) -> List[Monomial]:
        return [g.LM for g in self.groebner_basis(order)]

    def normal_form(self, f: PolyElement, order: Optional[MonomialOrder] = None) -> PolyElement:
        R = self.poly_ring(order)
        return normal_form(with_order(f, R), self.groebner_basis(order))

    def membership(self, f: PolyElement) -> bool:
        return not self.normal_form(f)

    def __contains__(self, f: PolyElement) -> bool:
        return self.membership(f)

    def contains(self, other: "Ideal") -> bool:
        """``other`` is a subideal of ``self``."""
        self._check_ring(other)
        return all(self.membership(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        self._check_ring(other)
        return self.groebner_basis() == other.groebner_basis()

    # -- graded pieces -------------------------------------------------------
    def in_initial(self, m: Monomial, order: Optional[MonomialOrder] = None) -> bool:
        return any(_divides(lm, m) for lm in self.leading_monomials(order))

    def standard_monomials(self, degree: DegreeLike, order: Optional[MonomialOrder] = None) -> List[Monomial]:
        """Monomials of the given degree outside the initial ideal, largest first."""
        R = self.poly_ring(order)
        lms = self.leading_monomials(order)
        return [m for m in self.ring.monomials_of_degree(degree, R.order)
                if not any(_divides(lm, m) for lm in lms)]

    def dim_piece(self, degree: DegreeLike, order: Optional[MonomialOrder] = None) -> int:
        """dim I_D, counted as monomials of degree D in the initial ideal."""
        lms = self.leading_monomials(order)
        return sum(1 for m in self.ring.monomials_of_degree(degree)
                   if any(_divides(lm, m) for lm in lms))

    def graded_piece(self, degree: DegreeLike, order: Optional[MonomialOrder] = None) -> List[PolyElement]:
        """A basis of I_D: ``m - NF(m)`` for every degree-D monomial m in the initial ideal."""
        R = self.poly_ring(order)
        basis = self.groebner_basis(order)
        lms = [g.LM for g in basis]
        out = []
        for m in self.ring.monomials_of_degree(degree, R.order):
            if any(_divides(lm, m) for lm in lms):
                mono = R({m: R.domain.one})
                out.append(mono - normal_form(mono, basis))
        return out

    # -- ideal algebra -------------------------------------------------------
    def _check_ring(self, other: "Ideal") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"ideals live in {self.ring} and {other.ring}")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        return Ideal(self.ring, self.generators + other.generators, check=False)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check_ring(other)
        if self.is_monomial() and other.is_monomial():
            R = self.poly_ring()
            monos = minimal_monomials(R.monomial_mul(f.LM, g.LM) for f in self.generators for g in other.generators)
            return Ideal.from_monomials(self.ring, monos)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators], check=False)

    def power(self, k: int) -> "Ideal":
        if k < 0:
            raise ValueError("ideal powers need k >= 0")
        result = Ideal.unit(self.ring)
        for _ in range(k):
            result = result * self
        return result

    def trim(self) -> "Ideal":
        """A minimal generating set: generators that are not in the ideal of the earlier, lower ones."""
        if self.is_monomial():
            return Ideal.from_monomials(self.ring, minimal_monomials(g.LM for g in self.generators))
        weights = self.ring.weights
        ordered = sorted(self.generators,
                         key=lambda g: sum(w * e for w, e in zip(weights, g.LM)))
        kept: List[PolyElement] = []
        for g in ordered:
            if not kept or not Ideal(self.ring, kept, check=False).membership(g):
                kept.append(g)
        return Ideal(self.ring, kept, check=False)


def monomial_ideal(ring: CoxRing, monomials: Iterable[Monomial]) -> Ideal:
    return Ideal.from_monomials(ring, minimal_monomials(monomials))


def irrelevant_ideal(ring: CoxRing) -> Ideal:
    """B(X), generated by one variable from every irrelevant block."""
    return monomial_ideal(ring, ring.irrelevant_generators)


def block_ideal(ring: CoxRing, indices: Sequence[int]) -> Ideal:
    n = ring.nvars
    return Ideal.from_monomials(ring, [tuple(1 if j == i else 0 for j in range(n)) for i in indices])


def factor_ideal(ring: CoxRing, block: int) -> Ideal:
    """The ideal of all variables of one block (the extension of a factor's irrelevant ideal)."""
    return block_ideal(ring, ring.block_indices(block))


def degree_ideal(ring: CoxRing, degree: DegreeLike) -> Ideal:
    """(S_D), the ideal generated by all monomials of degree D."""
    return Ideal.from_monomials(ring, ring.monomials_of_degree(degree))
