"""
Hilbert functions of graded quotients S/I and the target function h_{r,X}.

Hilbert function equality is only ever certified on a finite DegreeBox; the
reports say which box.
"""
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from sympy.polys.orderings import MonomialOrder

from .algebra.degrees import DegreeBox, DegreeLike, MultiDegree, join_all
from .algebra.rings import CoxRing
from .errors import PreconditionError
from .groebner.ideal import Ideal

logger = logging.getLogger(__name__)


def h_target(ring: CoxRing, r: int, degree: DegreeLike) -> int:
    """h_{r,X}(D) = min(dim S_D, r)."""
    if r < 1:
        raise ValueError(f"number of points must be positive, got {r}")
    return min(ring.dim_graded_piece(degree), r)


def hf_quotient(I: Ideal, degree: DegreeLike, order: Optional[MonomialOrder] = None) -> int:
    """dim (S/I)_D, counted as standard monomials of the initial ideal."""
    return I.ring.dim_graded_piece(degree) - I.dim_piece(degree, order)


def hf_row(I: Ideal, degrees: Iterable[DegreeLike]) -> List[int]:
    return [hf_quotient(I, d) for d in degrees]


def default_box(I: Ideal, r: int, margin: int = 0) -> DegreeBox:
    """(0..0) up to (r,..,r) plus the componentwise largest generator degree."""
    p = I.ring.pic_rank
    upper = MultiDegree((r + margin,) * p) + join_all(I.degrees(), p)
    return DegreeBox.up_to(upper)


@dataclass
class HilbertReport:
    ok: bool
    window: DegreeBox
    values: List[dict] = field(default_factory=list)
    first_failure: Optional[MultiDegree] = None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "window": self.window.to_json(),
            "first_failure": self.first_failure.to_list() if self.first_failure is not None else None,
            "values": self.values,
        }


def hf_matches_target(I: Ideal, r: int, box: Optional[DegreeBox] = None, margin: int = 0) -> HilbertReport:
    """Compare H_{S/I} with h_{r,X} on every degree of ``box``."""
    box = box or default_box(I, r, margin)
    report = HilbertReport(ok=True, window=box)
    for degree in box:
        hf = hf_quotient(I, degree)
        target = h_target(I.ring, r, degree)
        report.values.append({"degree": degree.to_list(), "hf": hf, "target": target})
        if hf != target and report.ok:
            report.ok = False
            report.first_failure = degree
            logger.info("Hilbert function over %s differs from h_%d at %s: %d != %d",
                        I.ring, r, degree, hf, target)
    return report


def forced_generators(ring: CoxRing, r: int, degree: DegreeLike) -> int:
    """Minimal generators every I with H_{S/I} = h_{r,X} has in ``degree``.

    Counted when all pieces just below have dimension at most r: there I
    vanishes, so all of I_D (of dimension dim S_D - r) is minimal.
    """
    degree = ring.degree(degree)
    for i in range(ring.pic_rank):
        below = degree - MultiDegree.unit(ring.pic_rank, i)
        if ring.is_effective(below) and ring.dim_graded_piece(below) > r:
            raise PreconditionError(f"S_{below} has dimension above {r}, so I need not vanish there")
    return max(ring.dim_graded_piece(degree) - r, 0)
