"""
Ideal-theoretic operations: intersection, quotients, saturation, elimination
and radical membership.

Monomial inputs take combinatorial shortcuts; everything else goes through an
elimination Groebner basis, with auxiliary variables prepended to the ring.
"""
import functools
import logging
from typing import Iterable, List, Sequence, Union

from sympy import QQ, Symbol
from sympy.polys.rings import PolyElement, PolyRing

from ..algebra.orders import GrevlexOrder, elimination_order
from ..algebra.polynomials import is_monomial, transfer, with_order
from ..errors import InputError, PreconditionError
from .engine import groebner, reduce_basis
from .ideal import Ideal, minimal_monomials

logger = logging.getLogger(__name__)

AUX_PREFIX = "_aux"


def _aux_ring(R: PolyRing, k: int) -> PolyRing:
    symbols = tuple(Symbol(f"{AUX_PREFIX}{i}") for i in range(k)) + tuple(R.symbols)
    return PolyRing(symbols, QQ, elimination_order(len(symbols), range(k)))


def _push(f: PolyElement, Rext: PolyRing, k: int) -> PolyElement:
    pad = (0,) * k
    return Rext.from_dict({pad + m: c for m, c in f.items()})


def _pull(f: PolyElement, R: PolyRing, k: int) -> PolyElement:
    return R.from_dict({m[k:]: c for m, c in f.items()})


def eliminate_variables(polys: Sequence[PolyElement], eliminated: Iterable[int],
                        weights: Sequence[int]) -> List[PolyElement]:
    """Reduced Groebner basis of (polys) intersected with the subring without ``eliminated``.

    The result lives in the ring of the inputs; the eliminated variables do
    not occur in it.
    """
    polys = [f for f in polys if f]
    if not polys:
        return []
    R = polys[0].ring
    eliminated = sorted(set(eliminated))
    Re = PolyRing(R.symbols, QQ, elimination_order(R.ngens, eliminated, weights))
    basis = reduce_basis(groebner([Re.from_dict(dict(f)) for f in polys], weights).basis)
    kept = [g for g in basis if not any(m[i] for m in g.keys() for i in eliminated)]
    logger.debug("elimination of %d variables: %d of %d basis elements survive",
                 len(eliminated), len(kept), len(basis))
    return [R.from_dict(dict(g)) for g in kept]


def _eliminate_aux(ideal: Ideal, polys: Sequence[PolyElement], k: int) -> Ideal:
    """Eliminate the first ``k`` (auxiliary) variables and return the ideal in ``ideal.ring``."""
    R = ideal.poly_ring()
    weights = (1,) * k + ideal.ring.weights
    basis = eliminate_variables(polys, range(k), weights)
    return Ideal(ideal.ring, [_pull(g, R, k) for g in basis], check=False)


# -- intersection and quotients ----------------------------------------------

def intersect(I: Ideal, J: Ideal) -> Ideal:
    I._check_ring(J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring, [])
    if I.is_monomial() and J.is_monomial():
        R = I.poly_ring()
        lcms = [R.monomial_lcm(f.LM, g.LM) for f in I.generators for g in J.generators]
        return Ideal.from_monomials(I.ring, minimal_monomials(lcms))
    R = I.poly_ring()
    Rext = _aux_ring(R, 1)
    t = Rext.gens[0]
    polys = [t * _push(f, Rext, 1) for f in I.generators]
    polys += [(Rext.one - t) * _push(g, Rext, 1) for g in J.generators]
    return _eliminate_aux(I, polys, 1)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    if not ideals:
        raise ValueError("intersect_all needs at least one ideal")
    return functools.reduce(intersect, ideals)


def _check_divisor(I: Ideal, f: PolyElement) -> PolyElement:
    R = I.poly_ring()
    if f.ring.symbols != R.symbols:
        raise InputError(f"{f} does not live in {I.ring}")
    f = with_order(f, R)
    if not f:
        raise PreconditionError("cannot divide or saturate by the zero polynomial")
    return f


def colon(I: Ideal, f: PolyElement) -> Ideal:
    """(I : f) for a single nonzero polynomial f."""
    f = _check_divisor(I, f)
    R = I.poly_ring()
    if I.is_monomial() and is_monomial(f):
        m = f.LM
        quotients = [tuple(max(a - b, 0) for a, b in zip(g.LM, m)) for g in I.generators]
        return Ideal.from_monomials(I.ring, minimal_monomials(quotients))
    K = intersect(I, Ideal(I.ring, [f], check=False))
    return Ideal(I.ring, [g.exquo(f) for g in K.groebner_basis()], check=False)


def saturate_variable(I: Ideal, var: int) -> Ideal:
    """(I : x^inf) for the variable with index ``var``.

    Uses grevlex with x smallest: for a homogeneous ideal, dividing every
    element of that Groebner basis by its largest power of x gives a basis
    of the saturation.
    """
    if I.is_zero():
        return I
    if I.is_monomial():
        stripped = [tuple(0 if i == var else e for i, e in enumerate(g.LM)) for g in I.generators]
        return Ideal.from_monomials(I.ring, minimal_monomials(stripped))
    n = I.ring.nvars
    priority = [i for i in range(n) if i != var] + [var]
    order = GrevlexOrder(priority, I.ring.weights)
    R = I.poly_ring()
    gens = []
    for g in I.groebner_basis(order):
        k = min(m[var] for m in g.keys())
        if k:
            g = R.from_dict({m[:var] + (m[var] - k,) + m[var + 1:]: c for m, c in g.items()})
        else:
            g = with_order(g, R)
        gens.append(g)
    return Ideal(I.ring, gens, check=False)


def saturate_by_poly(I: Ideal, f: PolyElement) -> Ideal:
    """(I : f^inf)."""
    f = _check_divisor(I, f)
    if f.is_ground:
        return I
    if is_monomial(f):
        result = I
        for var, e in enumerate(f.LM):
            if e:
                result = saturate_variable(result, var)
        return result
    R = I.poly_ring()
    Rext = _aux_ring(R, 1)
    t = Rext.gens[0]
    polys = [_push(g, Rext, 1) for g in I.generators] + [t * _push(f, Rext, 1) - Rext.one]
    return _eliminate_aux(I, polys, 1)


def saturate_irrelevant(I: Ideal, method: str = "blocks") -> Ideal:
    """(I : B(X)^inf).

    ``blocks`` saturates by one irrelevant block at a time, each as the
    intersection of the variable saturations of the block; B(X) is the product
    of the block ideals for every built-in family. ``generators`` intersects
    the saturations by the monomial generators of B(X) instead.
    """
    ring = I.ring
    if method == "generators":
        R = I.poly_ring()
        parts = [saturate_by_poly(I, R({m: R.domain.one})) for m in ring.irrelevant_generators]
        return intersect_all(parts)
    if method != "blocks":
        raise InputError(f"unknown saturation method {method!r}")
    result = I
    for block in ring.irrelevant_blocks:
        if result.is_unit():
            break
        result = intersect_all([saturate_variable(result, x) for x in block])
    logger.debug("saturation in %s: %d -> %d generators", ring, len(I), len(result))
    return result


def is_saturated(I: Ideal) -> bool:
    return saturate_irrelevant(I).equals(I)


# -- elimination ---------------------------------------------------------------

def _resolve(ring, variables: Iterable[Union[int, str]]) -> List[int]:
    out = []
    for v in variables:
        out.append(ring.index(v) if isinstance(v, str) else int(v))
    return sorted(set(out))


def eliminate(I: Ideal, variables: Iterable[Union[int, str]]) -> Ideal:
    """I intersected with the Cox ring of the factors whose variables are all kept.

    The eliminated variables must form whole blocks of a product of
    projective spaces, leaving at least one block.
    """
    ring = I.ring
    eliminated = _resolve(ring, variables)
    if not eliminated:
        return I
    if not ring.is_product:
        raise PreconditionError("elimination to a Cox subring needs a product of projective spaces")
    dropped = set(eliminated)
    kept_blocks = []
    for b, block in enumerate(ring.blocks):
        hit = dropped.intersection(block)
        if hit and len(hit) != len(block):
            raise PreconditionError(f"variables {sorted(hit)} are only part of block {b}")
        if not hit:
            kept_blocks.append(b)
    if not kept_blocks:
        raise PreconditionError("cannot eliminate every block")
    sub, kept = ring.factor_ring(kept_blocks)
    index_map = [None] * ring.nvars
    for new, old in enumerate(kept):
        index_map[old] = new
    S = sub.poly_ring()
    if I.is_monomial():
        gens = [g for g in I.groebner_basis() if not any(g.LM[i] for i in eliminated)]
    else:
        gens = eliminate_variables(I.generators, eliminated, ring.weights)
    return Ideal(sub, [transfer(g, S, index_map) for g in gens], check=False)


def restrict_to_blocks(I: Ideal, blocks: Sequence[int]) -> Ideal:
    """I intersected with the Cox ring of the chosen factors (0-based block indices)."""
    keep = set(blocks)
    dropped = [i for b, block in enumerate(I.ring.blocks) if b not in keep for i in block]
    return eliminate(I, dropped)


# -- radicals -------------------------------------------------------------------

def radical_membership(f: PolyElement, I: Ideal) -> bool:
    """f in sqrt(I), decided by 1 in I + (t f - 1)."""
    R = I.poly_ring()
    f = with_order(f, R)
    if not f:
        return True
    if I.is_zero():
        return False
    if I.is_monomial() and is_monomial(f):
        support = {i for i, e in enumerate(f.LM) if e}
        return any({i for i, e in enumerate(g.LM) if e} <= support for g in I.generators)
    Rext = _aux_ring(R, 1)
    t = Rext.gens[0]
    polys = [_push(g, Rext, 1) for g in I.generators] + [t * _push(f, Rext, 1) - Rext.one]
    basis = groebner(polys, (1,) + I.ring.weights).basis
    return any(g.is_ground for g in basis)
