"""
slipcheck criteria - necessary conditions for Slip membership and the classification of products
"""
from .classification import classify_pn, classify_products, slip_dim
from .degree_sets import DegreeRegion, DegreeSet, FiniteDegreeSet, c_degrees, in_c, parse_degree_set
from .homs import Quotient, ext1_dim_degree_zero, hom_dim_degree_zero, hom_map_rank
from .sufficiency import (
    CERTIFIED,
    CERTIFIED_UP_TO_L,
    REFUTED,
    RegularityCertificate,
    SufficiencyReport,
    Witness,
    corner_witness,
    diagonal_witness,
    factor_square_witness,
    hirzebruch_witness,
    multiplication_surjective,
    pn_regularity_certificate,
    projective_witness,
    sufficiency_witness_check,
)
from .tangent import (
    BUILTIN,
    BUILTIN_FACTOR_SQUARE,
    EXCLUDED,
    EXCLUDED_CONDITIONAL,
    INCONCLUSIVE,
    USER_ASSERTED,
    WITNESS,
    CriterionReport,
    SufficiencyCertificate,
    factor_square_certificate,
    tangent_criteria_all_factors,
    tangent_criterion_custom,
    tangent_criterion_factor,
    truncation_ideal,
)

__all__ = [
    'BUILTIN', 'BUILTIN_FACTOR_SQUARE', 'CERTIFIED', 'CERTIFIED_UP_TO_L', 'CriterionReport', 'DegreeRegion',
    'DegreeSet', 'EXCLUDED', 'EXCLUDED_CONDITIONAL', 'FiniteDegreeSet', 'INCONCLUSIVE', 'Quotient', 'REFUTED',
    'RegularityCertificate', 'SufficiencyCertificate', 'SufficiencyReport', 'USER_ASSERTED', 'WITNESS',
    'Witness', 'c_degrees', 'classify_pn', 'classify_products', 'corner_witness', 'diagonal_witness',
    'ext1_dim_degree_zero',
    'factor_square_certificate', 'factor_square_witness', 'hirzebruch_witness', 'hom_dim_degree_zero',
    'hom_map_rank', 'in_c', 'multiplication_surjective', 'parse_degree_set', 'pn_regularity_certificate',
    'projective_witness', 'slip_dim', 'sufficiency_witness_check', 'tangent_criteria_all_factors',
    'tangent_criterion_custom', 'tangent_criterion_factor', 'truncation_ideal',
]
