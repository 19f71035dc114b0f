"""
The family of ideals on P^1 x P^1 (one per r >= 4) whose saturation is
(beta_0, alpha_0^r) and whose Hilbert function is h_{r,P^1 x P^1}.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..algebra.degrees import MultiDegree
from ..algebra.orders import LexOrder
from ..algebra.rings import CoxRing, Monomial, product_of_projective_spaces
from ..errors import PreconditionError
from ..groebner.ideal import Ideal, minimal_monomials

logger = logging.getLogger(__name__)

ALIASES = ("a0", "a1", "b0", "b1")


def p1p1_ring() -> CoxRing:
    return product_of_projective_spaces([1, 1], ALIASES)


def p1p1_order() -> LexOrder:
    """lex with beta_0 > beta_1 > alpha_0 > alpha_1."""
    return LexOrder((2, 3, 0, 1))


@dataclass
class P1P1Construction:
    r: int
    ideal: Ideal
    saturation: Ideal
    embedding_degree: MultiDegree
    harvest_box: Tuple[int, int]

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "generators": self.ideal.to_strings(),
            "saturation": self.saturation.to_strings(),
            "embedding_degree": self.embedding_degree.to_list(),
            "harvest_box": list(self.harvest_box),
        }


def piece(ring: CoxRing, r: int, a: int, b: int) -> List[Monomial]:
    """I_(a,b): the (a+1)(b+1) - r smallest monomials of J_(a,b), or nothing."""
    size = (a + 1) * (b + 1)
    if size <= r:
        return []
    in_j = [m for m in ring.monomials_of_degree((a, b), p1p1_order()) if m[2] > 0 or m[0] >= r]
    return in_j[len(in_j) - (size - r):]


def construct_p1p1_ideal(r: int, b_scale: int = 2) -> P1P1Construction:
    """Build I degreewise on the box a <= r, b <= b_scale * r and take its minimal generators.

    For a >= r - 1 the ideal agrees with J; below that it is generated in
    beta-degree at most r + 1, so the box holds a full generating set.
    """
    if r < 4:
        raise PreconditionError(f"the construction is used for r >= 4, got {r}")
    ring = p1p1_ring()
    box = (r, max(b_scale * r, r + 2))
    monomials = []
    for a in range(box[0] + 1):
        for b in range(box[1] + 1):
            monomials.extend(piece(ring, r, a, b))
    ideal = Ideal.from_monomials(ring, minimal_monomials(monomials))
    J = Ideal.from_monomials(ring, [(0, 0, 1, 0), (r, 0, 0, 0)])
    logger.info("p1p1 construction for r=%d: %d minimal generators", r, len(ideal))
    return P1P1Construction(r, ideal, J, MultiDegree((1, r)), box)
