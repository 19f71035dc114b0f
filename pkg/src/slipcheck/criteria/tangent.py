"""
Tangent-space criteria: compare dim Hom_S(J, S/J)_0 of a comparison ideal
J = I_B + S_A with r * dim X.
"""
import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from sympy import QQ

from .. import linalg
from ..algebra.degrees import DegreeBox, MultiDegree
from ..algebra.polynomials import to_vector
from ..algebra.rings import CoxRing, Monomial
from ..errors import PreconditionError
from ..groebner.ideal import Ideal, minimal_monomials
from .classification import slip_dim
from .degree_sets import DegreeRegion, DegreeSet
from .homs import hom_dim_degree_zero
from .sufficiency import REFUTED, SufficiencyReport, factor_square_witness, sufficiency_witness_check

logger = logging.getLogger(__name__)

EXCLUDED = "excluded"
EXCLUDED_CONDITIONAL = "excluded-conditional"
INCONCLUSIVE = "inconclusive"

BUILTIN = "builtin"
BUILTIN_FACTOR_SQUARE = "builtin-factor-square"
WITNESS = "witness"
USER_ASSERTED = "user-asserted"


# -- the comparison ideal ---------------------------------------------------------

def _monomials_in(ring: CoxRing, A: DegreeSet) -> List[Monomial]:
    """Minimal monomials whose degree lies in A."""
    if ring.is_product:
        found = [m for u in A.generators for m in ring.monomials_of_degree(u)]
        return minimal_monomials(found)
    # A minimal m loses A when any variable is removed, so for every variable
    # x of m some coordinate i with deg(x)_i > 0 has deg(m)_i < u_i + deg(x)_i.
    # That bounds the number of variable factors by sum_i (u_i + M_i).
    top = [max(v.degree[i] for v in ring.variables) for i in range(ring.pic_rank)]
    found = []
    for u in A.generators:
        bound = sum(u) + sum(top)
        for size in range(bound + 1):
            for combo in itertools.combinations_with_replacement(range(ring.nvars), size):
                exps = [0] * ring.nvars
                for i in combo:
                    exps[i] += 1
                m = tuple(exps)
                if ring.degree_of_monomial(m) not in A:
                    continue
                below = (m[:i] + (m[i] - 1,) + m[i + 1:] for i in range(ring.nvars) if m[i])
                if all(ring.degree_of_monomial(w) not in A for w in below):
                    found.append(m)
    return minimal_monomials(found)


def _harvest_degrees(I: Ideal, B: DegreeSet, A: DegreeSet) -> List[MultiDegree]:
    """Degrees D in B \\ A with u <= D <= join(u, deg g) for a minimal u of B and a generator g."""
    degrees = set()
    for u in B.generators:
        for g in set(I.degrees()):
            for D in DegreeBox(u, u.join(g)):
                if D not in A:
                    degrees.add(D)
    return sorted(degrees, key=lambda d: (d.total(), d.coords))


def _harvest(I: Ideal, B: DegreeSet, A: DegreeSet) -> List:
    """Bases of I_D over the harvest degrees, keeping only elements not
    already generated by lower harvested ones.

    For D in B outside every box, each spanning element m g of I_D has
    (deg m)_i > 0 for an i with D_i > u_i and D_i > (deg g)_i, so
    I_D = sum_i S_{e_i} I_{D - e_i} with D - e_i in B.
    """
    ring = I.ring
    kept = []
    kept_degrees = []
    for D in _harvest_degrees(I, B, A):
        index = {m: j for j, m in enumerate(ring.monomials_of_degree(D))}
        spanned = []
        for g, dg in zip(kept, kept_degrees):
            if dg <= D:
                for m in ring.monomials_of_degree(D - dg):
                    spanned.append(to_vector(g.mul_monom(m), index))
        rows, _ = linalg.rref_rows(spanned, len(index))
        for f in I.graded_piece(D):
            v = to_vector(f, index)
            if not linalg.in_span(rows, v, len(index)):
                kept.append(f)
                kept_degrees.append(D)
                rows, _ = linalg.rref_rows(rows + [v], len(index))
    logger.debug("harvested %d generators of I_B from %s", len(kept), ring)
    return kept


def truncation_ideal(I: Ideal, B: DegreeSet, A: DegreeSet) -> Ideal:
    """J = I_B + S_A for upward-closed A contained in B."""
    ring = I.ring
    if B.p != ring.pic_rank or A.p != ring.pic_rank:
        raise PreconditionError(f"degree sets do not have Pic rank {ring.pic_rank}")
    if not A.issubset(B):
        raise PreconditionError(f"A = {A.to_json()} is not contained in B = {B.to_json()}")
    if B.is_everything():
        generators = list(I.generators)
    elif not ring.is_product:
        raise PreconditionError("a proper B is supported on products of projective spaces only")
    else:
        generators = _harvest(I, B, A)
    R = I.poly_ring()
    generators.extend(R({m: QQ.one}) for m in _monomials_in(ring, A))
    return Ideal(ring, generators, check=False)


# -- reports ------------------------------------------------------------------------

@dataclass
class SufficiencyCertificate:
    kind: str
    family: Optional[object] = None
    l_bound: int = 10
    window: Optional[object] = None
    report: Optional[SufficiencyReport] = None

    def to_json(self):
        if self.report is None:
            return self.kind
        return {"kind": self.kind, "check": self.report.to_json()}


@dataclass
class CriterionReport:
    criterion: str
    dim: int
    threshold: int
    verdict: str
    certificate: object = BUILTIN
    params: Dict[str, object] = field(default_factory=dict)
    generators: Optional[List[str]] = None

    @property
    def excluded(self) -> bool:
        return self.verdict in (EXCLUDED, EXCLUDED_CONDITIONAL)

    def to_json(self) -> dict:
        out = {"criterion": self.criterion}
        out.update(self.params)
        out.update({"dim": self.dim, "threshold": self.threshold, "verdict": self.verdict,
                    "certificate": self.certificate.to_json() if hasattr(self.certificate, "to_json")
                    else self.certificate})
        if self.generators is not None:
            out["generators"] = self.generators
        return out


def _verdict(dim: int, threshold: int) -> str:
    return EXCLUDED if dim < threshold else INCONCLUSIVE


def tangent_criterion_factor(I: Ideal, r: int, i: int) -> CriterionReport:
    """Compare dim Hom(I + a_i^2, S/(I + a_i^2))_0 with r dim X (i is 1-based)."""
    ring = I.ring
    if not ring.is_product or ring.pic_rank < 2:
        raise PreconditionError(f"the factor criterion needs a product of at least two projective spaces, not {ring}")
    p = ring.pic_rank
    if not 1 <= i <= p:
        raise PreconditionError(f"factor index {i} outside 1..{p}")
    J = truncation_ideal(I, DegreeSet.everything(p), DegreeSet.at_least(p, i - 1, 2))
    dim = hom_dim_degree_zero(J)
    threshold = slip_dim(ring, r)
    logger.info("factor criterion i=%d on %s: dim %d, threshold %d", i, ring, dim, threshold)
    return CriterionReport("ts-factor", dim, threshold, _verdict(dim, threshold), BUILTIN, {"i": i})


def tangent_criteria_all_factors(I: Ideal, r: int, max_workers: int = 1) -> List[CriterionReport]:
    """The factor criterion for every factor, ordered by factor index."""
    indices = range(1, I.ring.pic_rank + 1)
    if max_workers <= 1:
        return [tangent_criterion_factor(I, r, i) for i in indices]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda i: tangent_criterion_factor(I, r, i), indices))


def tangent_criterion_custom(I: Ideal, r: int, A: DegreeSet, B: DegreeSet,
                             certificate: SufficiencyCertificate) -> CriterionReport:
    """The criterion for J = I_B + S_A, graded by how sufficiency of B \\ A is known.

    A refuted witness leaves the verdict inconclusive; a user-asserted
    certificate downgrades an exclusion to excluded-conditional.
    """
    ring = I.ring
    J = truncation_ideal(I, B, A)
    region = DegreeRegion(B, A)
    kind = certificate.kind
    if kind == BUILTIN_FACTOR_SQUARE:
        p = ring.pic_rank
        matches = [i for i in range(p) if A == DegreeSet.at_least(p, i, 2)]
        if not (ring.is_product and p >= 2 and B.is_everything() and matches):
            raise PreconditionError("the factor-square certificate needs B = N^d and A = {u_i >= 2} on a product")
    elif kind == WITNESS:
        if certificate.family is None:
            raise PreconditionError("a witness certificate needs a witness family")
        certificate.report = sufficiency_witness_check(ring, r, region, certificate.family,
                                                       certificate.l_bound, certificate.window)
    elif kind == USER_ASSERTED:
        logger.warning("sufficiency of B \\ A is asserted by the caller, not checked")
    else:
        raise PreconditionError(f"unknown sufficiency certificate {kind!r}")

    dim = hom_dim_degree_zero(J)
    threshold = slip_dim(ring, r)
    verdict = _verdict(dim, threshold)
    if kind == WITNESS and certificate.report.status == REFUTED:
        logger.warning("witness refuted (%s); verdict left inconclusive", certificate.report.failure)
        verdict = INCONCLUSIVE
    elif kind == USER_ASSERTED and verdict == EXCLUDED:
        verdict = EXCLUDED_CONDITIONAL
    params = {"A": A.to_json(), "B": B.to_json()}
    logger.info("custom criterion on %s: dim %d, threshold %d, %s", ring, dim, threshold, verdict)
    return CriterionReport("ts-custom", dim, threshold, verdict, certificate, params, J.to_strings())


def factor_square_certificate(ring: CoxRing, r: int, i: int, **kwargs) -> SufficiencyCertificate:
    """A witness certificate built from the factor-square family."""
    return SufficiencyCertificate(WITNESS, factor_square_witness(ring, r, i), **kwargs)
