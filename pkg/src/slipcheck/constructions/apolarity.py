"""
Lifting saturated ideals of points in P^n to ideals with Hilbert function
h_{r,P^n} through inverse systems.

The dual ring S* is identified with exponent vectors in the same variables;
``alpha_i`` acts on a dual monomial by lowering the i-th exponent and the
pairing in degree k is the plain coefficient dot product.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.orderings import MonomialOrder

from .. import linalg
from ..algebra.orders import LexOrder
from ..algebra.polynomials import to_vector
from ..algebra.rings import PROJECTIVE, CoxRing, Monomial
from ..errors import PreconditionError
from ..groebner.ideal import Ideal
from ..groebner.operations import is_saturated
from ..hilbert import h_target, hf_quotient

logger = logging.getLogger(__name__)


def contract(i: int, u: Monomial) -> Optional[Monomial]:
    """alpha_i applied to x^u: x^(u - e_i), or ``None`` for zero."""
    if u[i] == 0:
        return None
    return u[:i] + (u[i] - 1,) + u[i + 1:]


def dual_name(u: Monomial) -> str:
    parts = []
    for i, e in enumerate(u):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


@dataclass
class DualSpaceBasis:
    """A subspace of S*_k as reduced row echelon rows over ``monomials``.

    ``monomials`` lists the degree-k dual monomials largest first.
    """

    degree: int
    monomials: Tuple[Monomial, ...]
    rows: List[Dict[int, object]] = field(default_factory=list)

    @classmethod
    def span(cls, degree: int, monomials: Sequence[Monomial], vectors) -> "DualSpaceBasis":
        rows, _ = linalg.rref_rows(list(vectors), len(monomials))
        return cls(degree, tuple(monomials), rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return len(self.monomials)

    def index(self) -> Dict[Monomial, int]:
        return {m: j for j, m in enumerate(self.monomials)}

    def contains(self, vector) -> bool:
        return linalg.in_span(self.rows, vector, len(self.monomials))

    def contains_monomial(self, u: Monomial) -> bool:
        return self.contains({self.index()[u]: QQ.one})

    def add(self, vectors) -> "DualSpaceBasis":
        return DualSpaceBasis.span(self.degree, self.monomials, self.rows + list(vectors))

    def perp(self) -> List[Dict[int, object]]:
        """Coordinates of the annihilator in S_k under the dot-product pairing."""
        return linalg.nullspace(self.rows, len(self.monomials))

    def to_strings(self) -> List[str]:
        out = []
        for row in self.rows:
            terms = []
            for j in sorted(row):
                c = row[j]
                name = dual_name(self.monomials[j])
                terms.append(name if c == 1 else f"{c}*{name}")
            out.append(" + ".join(terms))
        return out


def _check_projective(ring: CoxRing) -> None:
    if ring.family != PROJECTIVE:
        raise PreconditionError(f"inverse systems are implemented for P^n only, not {ring}")


def dual_monomials(ring: CoxRing, k: int, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, ...]:
    return ring.monomials_of_degree((k,), order or LexOrder(range(ring.nvars)))


def perp(I: Ideal, k: int, order: Optional[MonomialOrder] = None) -> DualSpaceBasis:
    """I_k^perp inside S*_k."""
    _check_projective(I.ring)
    monomials = dual_monomials(I.ring, k, order)
    index = {m: j for j, m in enumerate(monomials)}
    piece = [to_vector(g, index) for g in I.graded_piece((k,))]
    return DualSpaceBasis.span(k, monomials, linalg.nullspace(piece, len(monomials)))


def contract_space(V: DualSpaceBasis, lower: Sequence[Monomial]) -> DualSpaceBasis:
    """S_1 applied to V, as a subspace of S*_{k-1} over ``lower``."""
    index = {m: j for j, m in enumerate(lower)}
    vectors = []
    nvars = len(V.monomials[0]) if V.monomials else 0
    for row in V.rows:
        for i in range(nvars):
            image = {}
            for j, c in row.items():
                u = contract(i, V.monomials[j])
                if u is not None:
                    image[index[u]] = image.get(index[u], QQ.zero) + c
            if image:
                vectors.append(image)
    return DualSpaceBasis.span(V.degree - 1, lower, vectors)


@dataclass
class LargestMonomialCheck:
    monomial: Monomial
    escaping: List[int]
    largest_outside: Optional[Monomial]

    @property
    def holds(self) -> bool:
        if len(self.escaping) > 1:
            return False
        if self.escaping:
            return contract(self.escaping[0], self.monomial) == self.largest_outside
        return True


def largest_monomial_check(V: DualSpaceBasis, lower: Sequence[Monomial]) -> LargestMonomialCheck:
    """For the largest monomial x^u outside a proper subspace V of S*_k, list the variables
    whose contraction of x^u leaves S_1 applied to V, and the largest monomial outside that image."""
    if V.degree < 1 or V.dim >= V.ambient_dim:
        raise PreconditionError("needs a proper subspace in positive degree")
    u = next(m for j, m in enumerate(V.monomials) if not V.contains({j: QQ.one}))
    image = contract_space(V, lower)
    index = {m: j for j, m in enumerate(lower)}
    escaping = []
    for i in range(len(u)):
        w = contract(i, u)
        if w is not None and not image.contains({index[w]: QQ.one}):
            escaping.append(i)
    outside = next((m for j, m in enumerate(lower) if not image.contains({j: QQ.one})), None)
    return LargestMonomialCheck(u, escaping, outside)


@dataclass
class ApolarityLift:
    ideal: Ideal
    a: int
    b: int
    spaces: Dict[int, DualSpaceBasis] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "generators": self.ideal.to_strings(),
            "W": {str(k): V.to_strings() for k, V in sorted(self.spaces.items())},
        }


def apolarity_lift(J: Ideal, r: int, order: Optional[MonomialOrder] = None,
                   check_saturated: bool = True) -> ApolarityLift:
    """An ideal I with H_{S/I} = h_{r,P^n} and I_{>=b+1} = J_{>=b+1}.

    In each degree k in [a, b] the space J_k^perp is enlarged by the largest
    dual monomials (in ``order``, lex x0 > .. > xn by default) until it has
    dimension r, and I_k is its annihilator.
    """
    ring = J.ring
    _check_projective(ring)
    window = range(r + 2)
    H = [hf_quotient(J, (k,)) for k in window]
    if any(H[k] > H[k + 1] for k in range(len(H) - 1)):
        raise PreconditionError(f"Hilbert function {H} of S/J is not non-decreasing")
    if any(H[k] != r for k in (r - 1, r, r + 1) if k >= 0):
        raise PreconditionError(f"S/J does not have Hilbert polynomial {r}: {H}")
    if check_saturated and not is_saturated(J):
        raise PreconditionError("J is not saturated")

    a = next(k for k in window if h_target(ring, r, (k,)) == r)
    b = max((k for k in window if H[k] != r), default=-1)
    logger.info("apolarity lift in %s with r=%d: a=%d, b=%d", ring, r, a, b)
    if b < a:
        return ApolarityLift(J, a, b)
    if b + 1 >= r:
        raise PreconditionError(f"b + 1 = {b + 1} is not below r = {r}")

    R = J.poly_ring()
    generators = []
    spaces = {}
    for k in range(a, b + 1):
        W = perp(J, k, order)
        for j in range(W.ambient_dim):
            if W.dim == r:
                break
            unit = {j: QQ.one}
            if not W.contains(unit):
                W = W.add([unit])
        spaces[k] = W
        for vector in W.perp():
            generators.append(R.from_dict({W.monomials[j]: c for j, c in vector.items()}))
    generators.extend(J.graded_piece((b + 1,)))
    generators.extend(g for g, d in zip(J.generators, J.degrees()) if d[0] > b + 1)
    return ApolarityLift(Ideal(ring, generators, check=False), a, b, spaces)
