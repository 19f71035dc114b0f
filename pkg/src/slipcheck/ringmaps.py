"""
Graded homomorphisms between Cox rings: preimages of ideals, restrictions
to factors, Segre-type maps and the conditions that make a map a lift.

A ``GradedRingMap`` sends every source variable to a homogeneous target
polynomial whose degree is the image of the variable's degree under an
integer matrix (rows indexed by the target Pic coordinates).
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, Symbol
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement, PolyRing

from . import linalg
from .algebra.degrees import DegreeLike, MultiDegree
from .algebra.orders import elimination_order
from .algebra.polynomials import format_polynomial, parse_polynomial, polynomial_degree, to_vector, transfer, with_order
from .algebra.rings import CoxRing, Monomial, hirzebruch, projective_space
from .errors import DegreeMismatchError, NotGradedError, NotHomogeneousError, PreconditionError
from .groebner.ideal import Ideal, degree_ideal, irrelevant_ideal
from .groebner.operations import (
    eliminate_variables,
    is_saturated,
    radical_membership,
    restrict_to_blocks,
    saturate_irrelevant,
)
from .hilbert import h_target

logger = logging.getLogger(__name__)


@dataclass
class GradedRingMap:
    source: CoxRing
    target: CoxRing
    images: Tuple[PolyElement, ...]
    degree_map: Tuple[Tuple[int, ...], ...]
    name: str = ""
    _powers: Dict[Tuple[int, int], PolyElement] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        R = self.target.poly_ring()
        self.images = tuple(with_order(g, R) for g in self.images)
        self.degree_map = tuple(tuple(int(c) for c in row) for row in self.degree_map)
        if len(self.images) != self.source.nvars:
            raise NotGradedError(f"{len(self.images)} images for {self.source.nvars} source variables")
        if len(self.degree_map) != self.target.pic_rank or any(len(row) != self.source.pic_rank
                                                               for row in self.degree_map):
            raise DegreeMismatchError(f"degree map must be a {self.target.pic_rank} x {self.source.pic_rank} matrix")
        for var, image in zip(self.source.variables, self.images):
            expected = self.map_degree(var.degree)
            try:
                actual = polynomial_degree(self.target, image)
            except NotHomogeneousError as exc:
                raise NotGradedError(f"image of {var.display} is not homogeneous") from exc
            if actual is not None and actual != expected:
                raise NotGradedError(f"image of {var.display} has degree {actual}, expected {expected}")

    def map_degree(self, degree: DegreeLike) -> MultiDegree:
        d = self.source.degree(degree)
        return MultiDegree(sum(c * x for c, x in zip(row, d)) for row in self.degree_map)

    def _power(self, i: int, e: int) -> PolyElement:
        key = (i, e)
        cached = self._powers.get(key)
        if cached is None:
            cached = self._powers.setdefault(key, self.images[i] ** e)
        return cached

    def apply(self, f: PolyElement) -> PolyElement:
        R = self.target.poly_ring()
        out = R.zero
        for m, c in f.items():
            term = R.ground_new(c)
            for i, e in enumerate(m):
                if e:
                    term = term * self._power(i, e)
            out += term
        return out

    def apply_monomial(self, m: Monomial) -> PolyElement:
        return self.apply(self.source.poly_ring()({m: QQ.one}))

    def image_ideal(self, I: Ideal) -> Ideal:
        """phi(I) S[target]."""
        return Ideal(self.target, [self.apply(g) for g in I.generators], check=False)

    def to_json(self) -> dict:
        return {
            "source": self.source.descriptor(),
            "target": self.target.descriptor(),
            "degreeMap": [list(row) for row in self.degree_map],
            "images": [format_polynomial(g) for g in self.images],
        }


@dataclass(frozen=True)
class ToricLiftData:
    """Ray generators of both fans (one per Cox variable) and the dual map M_Y -> M_X."""

    source_rays: Tuple[Tuple[int, ...], ...]
    target_rays: Tuple[Tuple[int, ...], ...]
    delta: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rank_y = {len(u) for u in self.source_rays}
        rank_x = {len(u) for u in self.target_rays}
        if len(rank_y) != 1 or len(rank_x) != 1:
            raise DegreeMismatchError("ray generators of one fan must share a lattice")
        if len(self.delta) != rank_x.pop() or any(len(row) != next(iter(rank_y)) for row in self.delta):
            raise DegreeMismatchError("delta must map M_Y to M_X")

    @property
    def rank_y(self) -> int:
        return len(self.source_rays[0])


# -- preimages --------------------------------------------------------------------

def _graph_ring(phi: GradedRingMap) -> Tuple[PolyRing, List[int]]:
    nt, ns = phi.target.nvars, phi.source.nvars
    symbols = tuple(Symbol(f"_t{i}") for i in range(nt)) + tuple(Symbol(f"_s{j}") for j in range(ns))
    weights = list(phi.target.weights)
    for var in phi.source.variables:
        weights.append(max(1, phi.map_degree(var.degree).total()))
    return PolyRing(symbols, QQ, elimination_order(nt + ns, range(nt), weights)), weights


def preimage(phi: GradedRingMap, I: Ideal) -> Ideal:
    """phi^{-1}(I), by eliminating the target variables from I + (y_j - phi(y_j))."""
    if I.ring != phi.target:
        raise PreconditionError(f"ideal lives in {I.ring}, map target is {phi.target}")
    nt, ns = phi.target.nvars, phi.source.nvars
    G, weights = _graph_ring(phi)
    to_graph = list(range(nt))
    polys = [transfer(g, G, to_graph) for g in I.generators]
    for j, image in enumerate(phi.images):
        polys.append(G.gens[nt + j] - transfer(image, G, to_graph))
    kept = eliminate_variables(polys, range(nt), weights)
    S = phi.source.poly_ring()
    back = [None] * nt + list(range(ns))
    result = Ideal(phi.source, [transfer(g, S, back) for g in kept])
    logger.info("preimage under %s: %d generators", phi.name or "map", len(result))
    return result


def map_rank(phi: GradedRingMap, degree: DegreeLike) -> Tuple[int, int]:
    """(rank of phi on S_a, dim T_phi(a))."""
    degree = phi.source.degree(degree)
    target_degree = phi.map_degree(degree)
    index = {m: j for j, m in enumerate(phi.target.monomials_of_degree(target_degree))}
    rows = [to_vector(phi.apply_monomial(m), index) for m in phi.source.monomials_of_degree(degree)]
    return linalg.rank(rows, len(index)), len(index)


def preimage_piece_dim(phi: GradedRingMap, I: Ideal, degree: DegreeLike) -> int:
    """dim {f in S_a : phi(f) in I}, by linear algebra modulo I in degree phi(a)."""
    degree = phi.source.degree(degree)
    target_degree = phi.map_degree(degree)
    index = {m: j for j, m in enumerate(I.standard_monomials(target_degree))}
    monomials = phi.source.monomials_of_degree(degree)
    rows = [to_vector(I.normal_form(phi.apply_monomial(m)), index) for m in monomials]
    return len(monomials) - linalg.rank(rows, len(index))


@dataclass
class PreimageReport:
    ideal: Ideal
    surjectivity: List[dict]
    input_saturated: bool
    b_condition: bool
    output_saturated: Optional[bool]

    def to_json(self) -> dict:
        return {
            "generators": self.ideal.to_strings(),
            "surjectivity": self.surjectivity,
            "input_saturated": self.input_saturated,
            "b_condition": self.b_condition,
            "output_saturated": self.output_saturated,
        }


def preimage_report(phi: GradedRingMap, I: Ideal, degrees: Sequence[DegreeLike] = ()) -> PreimageReport:
    """The preimage together with the surjectivity of phi in the degrees it uses
    and, for a saturated I under a map with the B-condition, a saturation re-check."""
    J = preimage(phi, I)
    used = sorted({d for d in J.degrees()} | {phi.source.degree(d) for d in degrees}, key=lambda d: d.coords)
    surjectivity = []
    for d in used:
        rank, dim = map_rank(phi, d)
        surjectivity.append({"degree": d.to_list(), "rank": rank, "target_dim": dim, "surjective": rank == dim})
    input_saturated = is_saturated(I)
    b_condition = check_lift_B_condition(phi)
    output_saturated = is_saturated(J) if input_saturated and b_condition else None
    if output_saturated is False:
        logger.warning("preimage of a saturated ideal is not saturated under %s", phi.name or "map")
    return PreimageReport(J, surjectivity, input_saturated, b_condition, output_saturated)


def restrict_to_factor(I: Ideal, factors: Sequence[int]) -> Ideal:
    """I intersected with the Cox ring of the chosen factors (1-based)."""
    count = len(I.ring.blocks)
    bad = [i for i in factors if not 1 <= i <= count]
    if bad:
        raise PreconditionError(f"factor indices {bad} outside 1..{count}")
    return restrict_to_blocks(I, [i - 1 for i in factors])


# -- built-in maps ---------------------------------------------------------------------

def segre_map(ring: CoxRing, u: DegreeLike, r: Optional[int] = None,
              order: Optional[MonomialOrder] = None) -> GradedRingMap:
    """t_i -> g_i for the monomial basis g_1 > .. > g_{k+1} of S_u under ``order``, from S[P^k]."""
    u = ring.degree(u)
    if not ring.is_effective(u) or not any(u):
        raise PreconditionError(f"degree {u} is not effective and nonzero")
    basis = ring.monomials_of_degree(u, order)
    if r is not None and len(basis) < r:
        raise PreconditionError(f"dim S_{u} = {len(basis)} is below r = {r}")
    if len(basis) < 2:
        raise PreconditionError(f"dim S_{u} = {len(basis)} gives no projective space")
    k = len(basis) - 1
    source = projective_space(k, [f"t{i}" for i in range(1, k + 2)])
    R = ring.poly_ring()
    images = tuple(R({m: QQ.one}) for m in basis)
    return GradedRingMap(source, ring, images, tuple((c,) for c in u), name=f"segre{u.to_list()}")


def factor_inclusion(ring: CoxRing, factors: Sequence[int]) -> GradedRingMap:
    """S[X_F] -> S[X] for the product X_F of the chosen factors (1-based)."""
    blocks = sorted({i - 1 for i in factors})
    sub, kept = ring.factor_ring(blocks)
    R = ring.poly_ring()
    images = tuple(R.gens[i] for i in kept)
    degree_map = tuple(tuple(1 if b == blk else 0 for blk in blocks) for b in range(ring.pic_rank))
    return GradedRingMap(sub, ring, images, degree_map, name=f"inclusion{list(factors)}")


def blowdown_lift() -> Tuple[GradedRingMap, ToricLiftData]:
    """The lift of the blow-down Hirzebruch(1) -> P^2: b0 -> a3 a4, b1 -> a1 a4, b2 -> a2."""
    source = projective_space(2, ["b0", "b1", "b2"])
    target = hirzebruch(1)
    images = tuple(parse_polynomial(target, t) for t in ("a3*a4", "a1*a4", "a2"))
    phi = GradedRingMap(source, target, images, ((1,), (1,)), name="blowdown")
    data = ToricLiftData(
        source_rays=((-1, 1), (1, 0), (0, -1)),
        target_rays=((1, 0), (0, -1), (-1, 1), (0, 1)),
        delta=((1, 0), (0, 1)),
    )
    return phi, data


# -- lift conditions -----------------------------------------------------------------

def check_lift_B_condition(phi: GradedRingMap) -> bool:
    """B(target) lies in the radical of phi(B(source)) S[target]."""
    image = phi.image_ideal(irrelevant_ideal(phi.source))
    R = phi.target.poly_ring()
    return all(radical_membership(R({m: QQ.one}), image) for m in phi.target.irrelevant_generators)


def toric_lift_identity_check(phi: GradedRingMap, data: ToricLiftData) -> bool:
    """prod_rho phi(beta_rho)^<m, u_rho> = prod_rho alpha_rho^<delta(m), u_rho> for all m in M_Y.

    Both sides are Laurent monomials whose exponents are linear in m, so it
    suffices to compare them on a basis of M_Y.
    """
    if len(data.source_rays) != phi.source.nvars or len(data.target_rays) != phi.target.nvars:
        raise PreconditionError("one ray generator is needed per Cox variable")
    terms = []
    for var, image in zip(phi.source.variables, phi.images):
        if len(image) != 1:
            raise PreconditionError(f"image of {var.display} is not a monomial")
        terms.append(next(iter(image.items())))
    for k in range(data.rank_y):
        pairing = [u[k] for u in data.source_rays]
        lhs = [0] * phi.target.nvars
        coefficient = QQ.one
        for p, (m, c) in zip(pairing, terms):
            coefficient *= c ** p
            for i, e in enumerate(m):
                lhs[i] += p * e
        dm = [row[k] for row in data.delta]
        rhs = [sum(x * y for x, y in zip(dm, u)) for u in data.target_rays]
        if lhs != rhs or coefficient != QQ.one:
            logger.info("toric identity fails on the basis vector e_%d: %s != %s", k, lhs, rhs)
            return False
    return True


@dataclass
class EmbeddingReport:
    u: MultiDegree
    k: int
    generated: bool
    hilbert_match: bool
    radical: bool
    details: Dict[str, list] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.generated and self.hilbert_match and self.radical

    def to_json(self) -> dict:
        return {
            "u": self.u.to_list(),
            "k": self.k,
            "i_generated": self.generated,
            "ii_hilbert": self.hilbert_match,
            "iii_radical": self.radical,
            "holds": self.holds,
            "details": self.details,
        }


def check_embedding_conditions(ring: CoxRing, u: DegreeLike, r: int, window: int = 3) -> EmbeddingReport:
    """The three conditions under which the |u|-map preserves h_r.

    (i) Sym^d S_u -> S_du is onto for 1 <= d <= window; (ii) dim S_du equals
    binomial(k + d, d) whenever dim S_du < r; (iii) B(X) lies in the radical
    of (S_u).
    """
    u = ring.degree(u)
    basis = ring.monomials_of_degree(u)
    k = len(basis) - 1
    details: Dict[str, list] = {"i": [], "ii": [], "iii": []}

    generated = True
    products = {tuple(0 for _ in range(ring.nvars))}
    for d in range(1, window + 1):
        products = {tuple(x + y for x, y in zip(p, b)) for p in products for b in basis}
        onto = len(products) == ring.dim_graded_piece(u.scale(d))
        details["i"].append({"d": d, "surjective": onto})
        generated = generated and onto

    hilbert_match = True
    for d in range(max(window, r) + 1):
        dim = ring.dim_graded_piece(u.scale(d))
        if dim >= r:
            break
        expected = math.comb(k + d, d) if k >= 0 else 0
        details["ii"].append({"d": d, "dim": dim, "expected": expected, "target": h_target(ring, r, u.scale(d))})
        hilbert_match = hilbert_match and dim == expected

    span = degree_ideal(ring, u)
    R = ring.poly_ring()
    radical = True
    for m in ring.irrelevant_generators:
        inside = radical_membership(R({m: QQ.one}), span)
        details["iii"].append({"generator": format_polynomial(R({m: QQ.one})), "in_radical": inside})
        radical = radical and inside
    return EmbeddingReport(u, k, generated, hilbert_match, radical, details)


def saturation_preserved(phi: GradedRingMap, I: Ideal) -> bool:
    """For saturated I: the preimage equals its own saturation."""
    J = preimage(phi, I)
    return saturate_irrelevant(J).equals(J)
