"""
slipcheck groebner - Buchberger engine, ideals, ideal operations and syzygies
"""
from .engine import GroebnerResult, groebner, lift, normal_form, reduce_basis, reduced_groebner, schreyer_syzygies
from .ideal import Ideal, block_ideal, degree_ideal, factor_ideal, irrelevant_ideal, minimal_monomials, monomial_ideal
from .operations import (
    colon,
    eliminate,
    eliminate_variables,
    intersect,
    intersect_all,
    is_saturated,
    radical_membership,
    restrict_to_blocks,
    saturate_by_poly,
    saturate_irrelevant,
    saturate_variable,
)
from .syzygies import SyzygyModule, module_syzygies, syzygies


def groebner_basis(I: Ideal, order=None):
    return I.groebner_basis(order)


def membership(f, I: Ideal) -> bool:
    return I.membership(f)


def graded_piece(I: Ideal, degree, order=None):
    return I.graded_piece(degree, order)


__all__ = [
    'GroebnerResult', 'Ideal', 'SyzygyModule', 'block_ideal', 'colon', 'degree_ideal', 'eliminate',
    'eliminate_variables', 'factor_ideal', 'graded_piece', 'groebner', 'groebner_basis', 'intersect',
    'intersect_all', 'irrelevant_ideal', 'is_saturated', 'lift', 'membership', 'minimal_monomials',
    'module_syzygies', 'monomial_ideal', 'normal_form', 'radical_membership', 'reduce_basis',
    'reduced_groebner', 'restrict_to_blocks', 'saturate_by_poly', 'saturate_irrelevant',
    'saturate_variable', 'schreyer_syzygies', 'syzygies',
]
