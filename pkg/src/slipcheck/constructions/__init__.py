"""
slipcheck constructions - ideals with Hilbert function h_{r,X} built from simpler ones
"""
from .apolarity import (
    ApolarityLift,
    DualSpaceBasis,
    LargestMonomialCheck,
    apolarity_lift,
    contract,
    contract_space,
    dual_monomials,
    largest_monomial_check,
    perp,
)
from .p1p1 import P1P1Construction, construct_p1p1_ideal, p1p1_order, p1p1_ring
from .product_lift import ProductLift, product_lift

__all__ = [
    'ApolarityLift', 'DualSpaceBasis', 'LargestMonomialCheck', 'P1P1Construction', 'ProductLift',
    'apolarity_lift', 'construct_p1p1_ideal', 'contract', 'contract_space', 'dual_monomials',
    'largest_monomial_check', 'p1p1_order', 'p1p1_ring', 'perp', 'product_lift',
]
