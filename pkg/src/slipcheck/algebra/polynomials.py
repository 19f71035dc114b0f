"""
Polynomials over QQ in a Cox ring.

A polynomial is a sympy ``PolyElement``: a dict from exponent tuples to
rational coefficients with no zero entries, ordered by its ring's monomial
order. This module adds parsing, printing and the multigrading on top.
"""
from tokenize import TokenError
from typing import Dict, Iterable, List, Optional, Sequence

from sympy import QQ
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.orderings import MonomialOrder
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement, PolyRing

from ..errors import InputError, NotHomogeneousError, RingMismatchError
from .degrees import MultiDegree
from .rings import CoxRing, Monomial

Polynomial = PolyElement

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def parse_polynomial(ring: CoxRing, text: str, order: Optional[MonomialOrder] = None,
                     homogeneous: bool = True) -> Polynomial:
    """Parse ``text`` (``*``, ``^``, rational coefficients, variable names or aliases)."""
    R = ring.poly_ring(order)
    local = {}
    for var, sym in zip(ring.variables, R.symbols):
        local[var.name] = sym
        if var.alias:
            local[var.alias] = sym
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
        f = R.from_expr(expr)
    except (SyntaxError, TypeError, ValueError, CoercionFailed, TokenError) as exc:
        raise InputError(f"cannot parse polynomial {text!r} in {ring}: {exc}") from exc
    if homogeneous:
        polynomial_degree(ring, f)
    return f


def format_polynomial(f: Polynomial) -> str:
    return str(f).replace("**", "^")


def monomial(ring: CoxRing, exps: Sequence[int], order: Optional[MonomialOrder] = None,
             coeff=1) -> Polynomial:
    R = ring.poly_ring(order)
    return R.from_dict({tuple(exps): QQ(coeff)})


def from_monomials(ring: CoxRing, monomials: Iterable[Monomial],
                   order: Optional[MonomialOrder] = None) -> List[Polynomial]:
    R = ring.poly_ring(order)
    return [R.from_dict({tuple(m): QQ.one}) for m in monomials]


def from_vector(ring: CoxRing, basis: Sequence[Monomial], coeffs: Sequence,
                order: Optional[MonomialOrder] = None) -> Polynomial:
    """The polynomial with coordinates ``coeffs`` over the monomial ``basis``."""
    R = ring.poly_ring(order)
    return R.from_dict({m: c for m, c in zip(basis, coeffs) if c})


def to_vector(f: Polynomial, index: Dict[Monomial, int]) -> Dict[int, object]:
    """Sparse coordinates of ``f`` over a monomial basis given as monomial -> column."""
    out = {}
    for m, c in f.items():
        try:
            out[index[m]] = c
        except KeyError:
            raise NotHomogeneousError(f"monomial {m} is outside the expected graded piece") from None
    return out


def is_monomial(f: Polynomial) -> bool:
    return len(f) == 1


def polynomial_degree(ring: CoxRing, f: Polynomial) -> Optional[MultiDegree]:
    """The multidegree of a nonzero homogeneous ``f``; ``None`` for zero."""
    degree = None
    for m in f.keys():
        d = ring.degree_of_monomial(m)
        if degree is None:
            degree = d
        elif d != degree:
            raise NotHomogeneousError(f"{format_polynomial(f)} mixes degrees {degree} and {d}")
    return degree


def is_homogeneous(ring: CoxRing, f: Polynomial) -> bool:
    try:
        polynomial_degree(ring, f)
    except NotHomogeneousError:
        return False
    return True


def homogeneous_components(ring: CoxRing, f: Polynomial) -> Dict[MultiDegree, Polynomial]:
    parts: Dict[MultiDegree, dict] = {}
    for m, c in f.items():
        parts.setdefault(ring.degree_of_monomial(m), {})[m] = c
    return {d: f.ring.from_dict(terms) for d, terms in parts.items()}


def _same_ring(f: Polynomial, g: Polynomial) -> None:
    if f.ring.symbols != g.ring.symbols:
        raise RingMismatchError(f"operands live in {f.ring} and {g.ring}")


def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    return f + g.set_ring(f.ring)


def poly_multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    _same_ring(f, g)
    return f * g.set_ring(f.ring)


def poly_scale(f: Polynomial, c) -> Polynomial:
    return f * f.ring.domain.convert(c)


def with_order(f: Polynomial, R: PolyRing) -> Polynomial:
    """Move ``f`` into ``R`` (same symbols, possibly another order)."""
    if f.ring == R:
        return f
    if f.ring.symbols != R.symbols:
        raise RingMismatchError(f"cannot move a polynomial of {f.ring} into {R}")
    return R.from_dict(dict(f))


def transfer(f: Polynomial, R: PolyRing, index_map: Sequence[Optional[int]]) -> Polynomial:
    """Re-index ``f`` into ``R``; ``index_map[i]`` is the new position of variable i.

    Variables mapped to ``None`` must not occur in ``f``.
    """
    n = R.ngens
    out = {}
    for m, c in f.items():
        exps = [0] * n
        for i, e in enumerate(m):
            if e:
                j = index_map[i]
                if j is None:
                    raise RingMismatchError(f"variable {f.ring.symbols[i]} has no counterpart in {R}")
                exps[j] = e
        out[tuple(exps)] = c
    return R.from_dict(out)
