"""
Certificates that a set of degrees is (r, X)-sufficient.

A witness family assigns to every degree D of C(r, X) a tuple (E, F, G, k)
with E and E + F in the tested set and in C(r, X), F and G nef,
E + kF = D + G, and the multiplication S_F x S_{E+lF} -> S_{E+(l+1)F}
surjective for every l >= 0. Given such a family the set is sufficient.
Degree conditions are verified on a finite window of C(r, X).
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Container, List, Optional, Sequence

from ..algebra.degrees import DegreeBox, DegreeLike, MultiDegree
from ..algebra.rings import CoxRing, Monomial
from ..errors import PreconditionError
from .degree_sets import c_degrees, in_c

logger = logging.getLogger(__name__)

CERTIFIED = "certified"
CERTIFIED_UP_TO_L = "certified-up-to-l"
REFUTED = "refuted"


@dataclass(frozen=True)
class Witness:
    E: MultiDegree
    F: MultiDegree
    G: MultiDegree
    k: int

    def to_json(self) -> dict:
        return {"E": self.E.to_list(), "F": self.F.to_list(), "G": self.G.to_list(), "k": self.k}


WitnessFamily = Callable[[MultiDegree], Witness]


def projective_witness(e: int) -> WitnessFamily:
    """On P^n: E = e, F = 1, G = max(e - D, 0), k = max(D - e, 0)."""
    def family(D: MultiDegree) -> Witness:
        d = D[0]
        return Witness(MultiDegree((e,)), MultiDegree((1,)), MultiDegree((max(e - d, 0),)), max(d - e, 0))
    family.name = f"projective(e={e})"
    return family


def factor_square_witness(ring: CoxRing, r: int, i: int) -> WitnessFamily:
    """The family proving that {u : u_i <= 1} is sufficient on a product (i is 1-based)."""
    p = ring.pic_rank
    if not 1 <= i <= p:
        raise PreconditionError(f"factor index {i} outside 1..{p}")
    i0 = i - 1

    def family(D: MultiDegree) -> Witness:
        E = [0 if j == i0 else max(a, r) for j, a in enumerate(D)]
        G = [0 if j == i0 else max(r - a, 0) for j, a in enumerate(D)]
        return Witness(MultiDegree(E), MultiDegree.unit(p, i0), MultiDegree(G), D[i0])
    family.name = f"factor-square(i={i})"
    return family


def corner_witness(corner: DegreeLike, i: int) -> WitnessFamily:
    """Grow along e_i from the corner: E = join(D, c) with E_i = c_i (i is 1-based).

    Fits sets containing every u >= c, such as the degrees above a corner.
    """
    c = MultiDegree.of(corner)
    i0 = i - 1
    if not 0 <= i0 < len(c):
        raise PreconditionError(f"factor index {i} outside 1..{len(c)}")

    def family(D: MultiDegree) -> Witness:
        top = D.join(c)
        E = MultiDegree(c[i0] if j == i0 else x for j, x in enumerate(top))
        return Witness(E, MultiDegree.unit(len(c), i0), top - D, max(D[i0] - c[i0], 0))
    family.name = f"corner(c={c.to_list()}, i={i})"
    return family


def diagonal_witness(start: DegreeLike) -> WitnessFamily:
    """F = (1, ..., 1) from a fixed E; fits finite sets holding E and E + F."""
    E = MultiDegree.of(start)
    F = MultiDegree([1] * len(E))

    def family(D: MultiDegree) -> Witness:
        k = max(0, max(d - e for d, e in zip(D, E)))
        return Witness(E, F, E + F.scale(k) - D, k)
    family.name = f"diagonal(E={E.to_list()})"
    return family


def hirzebruch_witness(a: int) -> WitnessFamily:
    """On H_a: G = (d, 0), E = (d + u1 - a u2, 0), F = (a, 1), k = u2 with d the least making E_1 >= 1."""
    def family(D: MultiDegree) -> Witness:
        u1, u2 = D
        d = max(0, 1 - u1 + a * u2)
        return Witness(MultiDegree((d + u1 - a * u2, 0)), MultiDegree((a, 1)), MultiDegree((d, 0)), u2)
    family.name = f"hirzebruch(a={a})"
    return family


@dataclass
class SufficiencyReport:
    status: str
    family: str
    window: DegreeBox
    l_bound: Optional[int] = None
    checked: int = 0
    failure: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.status != REFUTED

    def to_json(self) -> dict:
        out = {"status": self.status, "family": self.family, "window": self.window.to_json(),
               "degrees_checked": self.checked}
        if self.l_bound is not None:
            out["l_bound"] = self.l_bound
        if self.failure is not None:
            out["failure"] = self.failure
        return out


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def multiplication_surjective(ring: CoxRing, F: DegreeLike, target: DegreeLike) -> bool:
    """S_F x S_{target - F} -> S_target is onto.

    Products of monomials are monomials, so the map is onto exactly when
    every monomial of the target degree has a divisor of degree F.
    """
    lower = ring.monomials_of_degree(F)
    return all(any(_divides(m, t) for m in lower) for t in ring.monomials_of_degree(target))


def _default_window(ring: CoxRing, r: int, window: int) -> DegreeBox:
    return DegreeBox.up_to([r + window] * ring.pic_rank)


def sufficiency_witness_check(ring: CoxRing, r: int, region: Container, family: WitnessFamily,
                              l_bound: int = 10, window=None) -> SufficiencyReport:
    """Check a witness family for ``region`` on every degree of C(r, X) in ``window``.

    ``window`` is a DegreeBox or an integer margin (box up to r + margin in
    each coordinate). Products of projective spaces pass the surjectivity
    condition for every l; Hirzebruch surfaces are checked for l <= l_bound.
    """
    if window is None or isinstance(window, int):
        window = _default_window(ring, r, 6 if window is None else window)
    name = getattr(family, "name", getattr(family, "__name__", "custom"))
    structural = ring.is_product
    status = CERTIFIED if structural else CERTIFIED_UP_TO_L
    report = SufficiencyReport(status, name, window, None if structural else l_bound)

    def refute(D: MultiDegree, w: Witness, reason: str) -> SufficiencyReport:
        report.status = REFUTED
        report.failure = {"degree": D.to_list(), "witness": w.to_json(), "reason": reason}
        logger.info("witness family %s fails at %s: %s", name, D, reason)
        return report

    surjective_cache = {}
    for D in c_degrees(ring, r, window):
        w = family(D)
        report.checked += 1
        if not ring.is_nef(w.F) or not ring.is_nef(w.G):
            raise PreconditionError(f"witness at {D} has non-nef F={w.F} or G={w.G}")
        if w.k < 0:
            return refute(D, w, "negative k")
        if w.E + w.F.scale(w.k) != D + w.G:
            return refute(D, w, "E + kF != D + G")
        for label, degree in (("E", w.E), ("E+F", w.E + w.F)):
            if degree not in region:
                return refute(D, w, f"{label} not in the tested set")
            if not in_c(ring, r, degree):
                return refute(D, w, f"{label} not in C(r, X)")
        if structural:
            continue
        key = (w.E, w.F)
        if key not in surjective_cache:
            surjective_cache[key] = next(
                (l for l in range(l_bound + 1)
                 if not multiplication_surjective(ring, w.F, w.E + w.F.scale(l + 1))), None)
        bad = surjective_cache[key]
        if bad is not None:
            return refute(D, w, f"multiplication map not surjective at l={bad}")
    if report.status == CERTIFIED_UP_TO_L:
        logger.warning("witness family %s only checked for l <= %d on %s", name, l_bound, ring)
    logger.info("witness family %s on %s: %s over %d degrees", name, ring, report.status, report.checked)
    return report


@dataclass
class RegularityCertificate:
    n: int
    r: int
    e: int
    degrees: List[int] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return any(d > self.e for d in self.degrees)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "e": self.e, "degrees": self.degrees, "sufficient": self.holds}


def pn_regularity_certificate(n: int, r: int, degrees: Sequence[int]) -> RegularityCertificate:
    """A degree set on P^n containing a degree above e = min{a : dim S_a >= r} is sufficient."""
    if n < 1 or r < 1:
        raise PreconditionError(f"needs n >= 1 and r >= 1, got n={n}, r={r}")
    e = 0
    while math.comb(n + e, n) < r:
        e += 1
    return RegularityCertificate(n, r, e, sorted(int(d) for d in degrees))
