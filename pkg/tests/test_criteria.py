import itertools
import logging
import random

import pytest
import sympy
from sympy import QQ

from slipcheck.algebra.degrees import MultiDegree
from slipcheck.algebra.rings import greek_aliases, hirzebruch, projective_space
from slipcheck.criteria import (
    BUILTIN_FACTOR_SQUARE,
    CERTIFIED,
    CERTIFIED_UP_TO_L,
    EXCLUDED,
    EXCLUDED_CONDITIONAL,
    INCONCLUSIVE,
    REFUTED,
    USER_ASSERTED,
    WITNESS,
    DegreeRegion,
    DegreeSet,
    FiniteDegreeSet,
    SufficiencyCertificate,
    Witness,
    classify_products,
    corner_witness,
    diagonal_witness,
    ext1_dim_degree_zero,
    factor_square_witness,
    hirzebruch_witness,
    hom_dim_degree_zero,
    in_c,
    multiplication_surjective,
    parse_degree_set,
    pn_regularity_certificate,
    projective_witness,
    slip_dim,
    sufficiency_witness_check,
    tangent_criteria_all_factors,
    tangent_criterion_custom,
    tangent_criterion_factor,
    truncation_ideal,
)
from slipcheck.errors import DegreeMismatchError, InputError, PreconditionError
from slipcheck.groebner import Ideal
from slipcheck.ringmaps import GradedRingMap
from slipcheck.hilbert import hf_row

SIX_POINTS = ["a0^3", "a0*a1^2", "a0^2*a2", "a0*a1*a2", "a0*a2^4", "a1^6"]


@pytest.fixture
def six_points(p2):
    return Ideal.from_strings(p2, SIX_POINTS)


def test_degree_set_keeps_minimal_generators():
    """Generators above another generator are dropped."""
    S = DegreeSet.of(2, [(1, 0), (2, 0), (0, 3)])
    assert S.to_json() == [[0, 3], [1, 0]]
    assert (2, 1) in S
    assert (0, 2) not in S


def test_degree_set_constructors():
    """everything, empty and at_least behave as named."""
    assert DegreeSet.everything(2).is_everything()
    assert DegreeSet.empty(2).is_empty()
    assert (0, 0) not in DegreeSet.empty(2)
    at_least = DegreeSet.at_least(2, 1, 2)
    assert (0, 2) in at_least and (5, 1) not in at_least
    assert at_least.issubset(DegreeSet.everything(2))
    assert not DegreeSet.everything(2).issubset(at_least)
    assert DegreeSet.at_least(2, 0, 1).union(at_least).to_json() == [[0, 2], [1, 0]]


def test_degree_set_length_mismatch():
    """Generators must have the Pic rank of the set."""
    with pytest.raises(DegreeMismatchError):
        DegreeSet.of(2, [(1,)])


def test_degree_region_and_finite_set():
    """A region is B minus A; finite sets hold exactly their degrees."""
    region = DegreeRegion(DegreeSet.everything(1), DegreeSet.at_least(1, 0, 5))
    assert (4,) in region and (5,) not in region
    assert region.to_json() == {"B": [[0]], "A": [[5]]}
    finite = FiniteDegreeSet.of([3, 4])
    assert (3,) in finite and (5,) not in finite


def test_parse_degree_set():
    """Bare integers are degrees of Pic rank one."""
    assert parse_degree_set(1, [4]).to_json() == [[4]]
    assert parse_degree_set(2, [[1, 2]]).to_json() == [[1, 2]]
    with pytest.raises(InputError):
        parse_degree_set(2, [None])


def test_c_membership(p1p1):
    """C(r, X) holds the effective degrees with dim S_D >= r."""
    assert in_c(p1p1, 3, (1, 1))
    assert not in_c(p1p1, 3, (1, 0))
    assert not in_c(p1p1, 1, (-1, 4))


@pytest.mark.parametrize("r, ns, irreducible", [
    (1, [2, 2], True),
    (7, [1], True),
    (3, [3], True),
    (4, [2], False),
    (4, [1, 1], False),
    (2, [1, 1], False),
    (3, [2, 1], False),
])
def test_classify_products(r, ns, irreducible):
    """Irreducible exactly for one point, P^1, or P^n with r <= 3."""
    assert classify_products(r, ns)["irreducible"] is irreducible


def test_classify_products_reasons():
    """The reason names the reducible projection or example."""
    assert "P^1 x P^1" in classify_products(4, [1, 1])["reason"]
    assert "P^3" in classify_products(5, [3, 1])["reason"]
    assert classify_products(2, [1, 1])["reason"] == "2-point example on two factors"
    with pytest.raises(InputError):
        classify_products(0, [1])


def test_slip_dim(p1p1):
    """r times the dimension of X."""
    assert slip_dim(p1p1, 3) == 6


def test_witness_families():
    """The named families produce tuples with E + kF = D + G."""
    w = corner_witness((2, 1), 1)(MultiDegree((0, 0)))
    assert w == Witness(MultiDegree((2, 1)), MultiDegree((1, 0)), MultiDegree((2, 1)), 0)
    w = diagonal_witness((1, 1))(MultiDegree((3, 1)))
    assert (w.k, w.G.to_list()) == (2, [0, 2])
    w = projective_witness(3)(MultiDegree((5,)))
    assert (w.E.to_list(), w.G.to_list(), w.k) == ([3], [0], 2)
    w = hirzebruch_witness(1)(MultiDegree((1, 1)))
    assert w.to_json() == {"E": [1, 0], "F": [1, 1], "G": [1, 0], "k": 1}


def test_witness_factor_index_is_checked(p1p1):
    """Factor indices are 1-based and bounded by the Pic rank."""
    with pytest.raises(PreconditionError):
        factor_square_witness(p1p1, 2, 3)
    with pytest.raises(PreconditionError):
        corner_witness((1, 1), 0)


@pytest.mark.parametrize("e, tested", [(3, [3, 4]), (4, [4, 5])])
def test_projective_sufficiency(p2, e, tested):
    """Two consecutive degrees above regularity are sufficient for six points."""
    report = sufficiency_witness_check(p2, 6, FiniteDegreeSet.of(tested), projective_witness(e))
    assert report.status == CERTIFIED
    assert report.checked > 0
    assert pn_regularity_certificate(2, 6, tested).holds


def test_single_degree_is_refuted(p2):
    """Without E + F in the set the witness fails and says where."""
    report = sufficiency_witness_check(p2, 6, FiniteDegreeSet.of([3]), projective_witness(3), window=2)
    assert report.status == REFUTED
    assert not report.ok
    assert report.failure["reason"] == "E+F not in the tested set"
    assert report.to_json()["failure"]["degree"] == [2]


def test_factor_square_family_certifies(p1p1):
    """{u : u_1 <= 1} is sufficient on P^1 x P^1."""
    region = DegreeRegion(DegreeSet.everything(2), DegreeSet.at_least(2, 0, 2))
    report = sufficiency_witness_check(p1p1, 2, region, factor_square_witness(p1p1, 2, 1), window=3)
    assert report.status == CERTIFIED
    assert report.l_bound is None


def test_hirzebruch_family_certifies_up_to_l(h1, caplog):
    """On Hirzebruch surfaces surjectivity is only checked up to the bound."""
    caplog.set_level(logging.WARNING, logger="slipcheck")
    region = DegreeRegion(DegreeSet.everything(2), DegreeSet.at_least(2, 1, 2))
    report = sufficiency_witness_check(h1, 2, region, hirzebruch_witness(1), l_bound=3, window=2)
    assert report.status == CERTIFIED_UP_TO_L
    assert report.to_json()["l_bound"] == 3
    assert "only checked for l <= 3" in caplog.text


def test_non_nef_witness_is_a_precondition_error(h1):
    """(0, 1) is not nef on Hirzebruch(1)."""
    def family(D):
        return Witness(D, MultiDegree((0, 1)), MultiDegree((0, 0)), 0)
    with pytest.raises(PreconditionError):
        sufficiency_witness_check(h1, 2, DegreeSet.everything(2), family, window=1)


def test_multiplication_surjective(p1p1, h1):
    """Every monomial needs a divisor of degree F."""
    assert multiplication_surjective(p1p1, (1, 0), (2, 1))
    assert not multiplication_surjective(h1, (0, 1), (1, 1))
    assert multiplication_surjective(h1, (1, 1), (2, 2))


def test_pn_regularity_certificate():
    """e is the first degree with at least r monomials."""
    certificate = pn_regularity_certificate(2, 6, [2])
    assert certificate.e == 2
    assert not certificate.holds
    assert pn_regularity_certificate(2, 6, [4, 3]).to_json()["degrees"] == [3, 4]
    with pytest.raises(PreconditionError):
        pn_regularity_certificate(0, 6, [3])


def test_truncation_hilbert_functions(six_points):
    """Truncating from below and padding with S_A move H as expected."""
    degrees = [(k,) for k in range(8)]
    everything, nothing = DegreeSet.everything(1), DegreeSet.empty(1)
    assert hf_row(six_points, degrees) == [1, 3, 6, 6, 6, 6, 6, 6]
    J = truncation_ideal(six_points, DegreeSet.at_least(1, 0, 4), nothing)
    assert hf_row(J, degrees) == [1, 3, 6, 10, 6, 6, 6, 6]
    J = truncation_ideal(six_points, everything, DegreeSet.at_least(1, 0, 5))
    assert hf_row(J, degrees) == [1, 3, 6, 6, 6, 0, 0, 0]


def test_truncation_ideal_preconditions(six_points, h1):
    """A must lie in B, ranks must agree and proper B needs a product."""
    with pytest.raises(PreconditionError):
        truncation_ideal(six_points, DegreeSet.at_least(1, 0, 5), DegreeSet.at_least(1, 0, 4))
    with pytest.raises(PreconditionError):
        truncation_ideal(six_points, DegreeSet.everything(2), DegreeSet.empty(2))
    I = Ideal.from_strings(h1, ["a1"])
    with pytest.raises(PreconditionError):
        truncation_ideal(I, DegreeSet.at_least(2, 0, 1), DegreeSet.empty(2))


def test_factor_criterion_excludes_two_points(two_points):
    """The two-point ideal has a two-dimensional tangent space after adding a^2."""
    report = tangent_criterion_factor(two_points, 2, 1)
    assert report.dim == 2
    assert report.threshold == 4
    assert report.verdict == EXCLUDED
    assert report.excluded
    assert report.to_json()["i"] == 1


def test_factor_criterion_preconditions(p2, two_points):
    """The factor criterion needs a product with at least two factors."""
    with pytest.raises(PreconditionError):
        tangent_criterion_factor(Ideal.from_strings(p2, ["a0"]), 2, 1)
    with pytest.raises(PreconditionError):
        tangent_criterion_factor(two_points, 2, 3)


def test_all_factors_in_order(two_points):
    """Reports come back by factor index, also from the thread pool."""
    serial = tangent_criteria_all_factors(two_points, 2)
    assert [report.params["i"] for report in serial] == [1, 2]
    assert serial[0].dim == 2
    pooled = tangent_criteria_all_factors(two_points, 2, max_workers=2)
    assert [report.dim for report in pooled] == [report.dim for report in serial]


def test_custom_criterion_with_witness(six_points):
    """I + B^5 has an 8-dimensional tangent space, below 12."""
    certificate = SufficiencyCertificate(WITNESS, projective_witness(3), window=3)
    report = tangent_criterion_custom(six_points, 6, DegreeSet.at_least(1, 0, 5), DegreeSet.everything(1),
                                      certificate)
    assert (report.dim, report.threshold, report.verdict) == (8, 12, EXCLUDED)
    assert report.to_json()["certificate"]["check"]["status"] == CERTIFIED


def test_custom_criterion_user_asserted_is_conditional(six_points, caplog):
    """An unchecked certificate downgrades the exclusion."""
    caplog.set_level(logging.WARNING, logger="slipcheck")
    certificate = SufficiencyCertificate(USER_ASSERTED)
    report = tangent_criterion_custom(six_points, 6, DegreeSet.at_least(1, 0, 5), DegreeSet.everything(1),
                                      certificate)
    assert report.verdict == EXCLUDED_CONDITIONAL
    assert report.excluded
    assert "asserted by the caller" in caplog.text


def test_custom_criterion_refuted_witness_is_inconclusive(six_points):
    """A failing witness leaves the verdict open."""
    certificate = SufficiencyCertificate(WITNESS, projective_witness(6), window=2)
    report = tangent_criterion_custom(six_points, 6, DegreeSet.at_least(1, 0, 5), DegreeSet.everything(1),
                                      certificate)
    assert report.verdict == INCONCLUSIVE
    assert certificate.report.status == REFUTED


def test_custom_criterion_builtin_factor_square(two_points):
    """The built-in certificate matches the factor criterion and refuses other shapes."""
    everything = DegreeSet.everything(2)
    report = tangent_criterion_custom(two_points, 2, DegreeSet.at_least(2, 0, 2), everything,
                                      SufficiencyCertificate(BUILTIN_FACTOR_SQUARE))
    assert (report.dim, report.verdict) == (2, EXCLUDED)
    with pytest.raises(PreconditionError):
        tangent_criterion_custom(two_points, 2, DegreeSet.at_least(2, 0, 3), everything,
                                 SufficiencyCertificate(BUILTIN_FACTOR_SQUARE))
    with pytest.raises(PreconditionError):
        tangent_criterion_custom(two_points, 2, DegreeSet.at_least(2, 0, 2), everything,
                                 SufficiencyCertificate(WITNESS))


def test_hom_of_one_point(p2):
    """The tangent space to P^2 at a point is two-dimensional."""
    assert hom_dim_degree_zero(Ideal.from_strings(p2, ["a1", "a2"])) == 2


def test_ext1_of_zero_module(p2):
    """Ext^1(J/J, S/J) vanishes; I must lie in J."""
    I = Ideal.from_strings(p2, ["a1", "a2"])
    assert ext1_dim_degree_zero(I, I) == 0
    with pytest.raises(PreconditionError):
        ext1_dim_degree_zero(Ideal.from_strings(p2, ["a0"]), I)


def test_projective_space_ring_piece():
    """Six points need degree two on P^2."""
    ring = projective_space(2, greek_aliases([2]))
    assert in_c(ring, 6, (2,)) and not in_c(ring, 6, (1,))
    assert in_c(hirzebruch(1), 3, (1, 1))


P3_DEGREES = [(1,), (2,), (3,)]
P1P1_DEGREES = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2)]


@pytest.mark.parametrize("seed", range(25))
def test_hom_dim_matches_brute_force(p1p1, dense_hom_dim, random_monomials, seed):
    """Syzygy-based Hom agrees with solving for generator images directly."""
    rng = random.Random(seed)
    if seed % 2 == 0:
        ring, degrees = projective_space(3, greek_aliases([3])), P3_DEGREES
    else:
        ring, degrees = p1p1, P1P1_DEGREES
    monomials = random_monomials(ring, rng, rng.randint(2, 4), degrees)
    assert hom_dim_degree_zero(Ideal.from_monomials(ring, monomials)) == dense_hom_dim(ring, monomials)


def _block_change(ring, rng):
    """A random invertible linear change of variables inside each factor."""
    R = ring.poly_ring()
    images = [None] * ring.nvars
    for block in ring.blocks:
        while True:
            matrix = [[rng.randint(-2, 2) for _ in block] for _ in block]
            if sympy.Matrix(matrix).det() != 0:
                break
        for i, row in zip(block, matrix):
            images[i] = sum((QQ(c) * R.gens[j] for j, c in zip(block, row)), R.zero)
    identity = tuple(tuple(int(i == j) for j in range(ring.pic_rank)) for i in range(ring.pic_rank))
    return GradedRingMap(ring, ring, tuple(images), identity, name="change")


@pytest.mark.parametrize("seed", range(4))
def test_hom_dim_invariance(p1p1, random_binomial_ideal, seed):
    """Reordering generators, passing to a Groebner basis and changing coordinates keep dim Hom."""
    rng = random.Random(500 + seed)
    I = random_binomial_ideal(p1p1, rng, count=3, top=2)
    expected = hom_dim_degree_zero(I)
    shuffled = list(I.generators)
    rng.shuffle(shuffled)
    assert hom_dim_degree_zero(Ideal(p1p1, shuffled)) == expected
    assert hom_dim_degree_zero(Ideal(p1p1, I.groebner_basis(p1p1.order("lex")))) == expected
    assert hom_dim_degree_zero(_block_change(p1p1, rng).image_ideal(I)) == expected


def _irreducible_by_rule(r, ns):
    return r == 1 or (len(ns) == 1 and (ns[0] == 1 or r <= 3))


CLASSIFICATION_GRID = [(r, ns) for r in range(1, 7) for d in range(1, 4)
                       for ns in itertools.product(range(1, 4), repeat=d)]


@pytest.mark.parametrize("r, ns", CLASSIFICATION_GRID)
def test_classify_products_grid(r, ns):
    """One point, the projective line, and P^n with at most three points are the irreducible cases."""
    assert classify_products(r, list(ns))["irreducible"] is _irreducible_by_rule(r, ns)
