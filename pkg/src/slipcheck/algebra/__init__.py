"""
slipcheck algebra - multidegrees, Cox rings, monomial orders and polynomials
"""
from .degrees import DegreeBox, MultiDegree
from .orders import (
    BlockOrder,
    GrevlexOrder,
    LexOrder,
    PositionOverTermOrder,
    elimination_order,
    order_from_name,
    product_order,
)
from .polynomials import (
    Polynomial,
    format_polynomial,
    is_homogeneous,
    monomial,
    parse_polynomial,
    poly_add,
    poly_multiply,
    poly_scale,
    polynomial_degree,
)
from .rings import (
    CoxRing,
    Monomial,
    Variable,
    greek_aliases,
    hirzebruch,
    product_of_projective_spaces,
    projective_space,
    ring_from_descriptor,
)


def dim_graded_piece(ring: CoxRing, degree) -> int:
    return ring.dim_graded_piece(degree)


def monomials_of_degree(ring: CoxRing, degree, order=None):
    return ring.monomials_of_degree(degree, order)


__all__ = [
    'BlockOrder', 'CoxRing', 'DegreeBox', 'GrevlexOrder', 'LexOrder', 'Monomial', 'MultiDegree',
    'Polynomial', 'PositionOverTermOrder', 'Variable', 'dim_graded_piece', 'elimination_order',
    'format_polynomial', 'greek_aliases', 'hirzebruch', 'is_homogeneous', 'monomial',
    'monomials_of_degree', 'order_from_name', 'parse_polynomial', 'poly_add', 'poly_multiply', 'product_order',
    'poly_scale', 'polynomial_degree', 'product_of_projective_spaces', 'projective_space',
    'ring_from_descriptor',
]
