import random

import pytest
import sympy
from sympy import QQ

from slipcheck.algebra.degrees import DegreeBox
from slipcheck.algebra.polynomials import parse_polynomial
from slipcheck.algebra.rings import greek_aliases, projective_space
from slipcheck.constructions import (
    ProductLift,
    apolarity_lift,
    construct_p1p1_ideal,
    contract,
    dual_monomials,
    p1p1_order,
    perp,
    product_lift,
)
from slipcheck.constructions.apolarity import DualSpaceBasis, largest_monomial_check
from slipcheck.errors import PreconditionError
from slipcheck.groebner import Ideal, restrict_to_blocks, saturate_irrelevant
from slipcheck.hilbert import hf_matches_target
from slipcheck.ringmaps import GradedRingMap


def _line_and_power(n, r):
    ring = projective_space(n, greek_aliases([n]))
    return Ideal.from_strings(ring, [f"a{i}" for i in range(n - 1)] + [f"a{n - 1}^{r}"])


def test_contract():
    """alpha_i lowers the i-th exponent or kills the monomial."""
    assert contract(1, (2, 1, 0)) == (2, 0, 0)
    assert contract(2, (2, 1, 0)) is None


def test_perp_dimension(p2):
    """dim J_k^perp = dim (S/J)_k."""
    J = _line_and_power(2, 4)
    assert perp(J, 2).dim == 3
    assert perp(J, 5).dim == 4


@pytest.mark.parametrize("n, r, a, b", [(2, 4, 2, 2), (2, 5, 2, 3), (3, 4, 1, 2)])
def test_apolarity_lift(n, r, a, b):
    """The lift has H = h_r, sits inside J, agrees with J from b + 1 on and misses a0^(r-2)."""
    J = _line_and_power(n, r)
    lift = apolarity_lift(J, r)
    I = lift.ideal
    assert (lift.a, lift.b) == (a, b)
    assert hf_matches_target(I, r).ok
    assert J.contains(I)
    assert I.dim_piece((b + 1,)) == J.dim_piece((b + 1,))
    assert parse_polynomial(I.ring, f"a0^{r - 2}") not in I
    assert all(W.dim == r for W in lift.spaces.values())


def test_apolarity_lift_json():
    """The report lists the enlarged dual spaces by degree."""
    data = apolarity_lift(_line_and_power(2, 4), 4).to_json()
    assert data["a"] == 2 and data["b"] == 2
    assert list(data["W"]) == ["2"]
    assert len(data["W"]["2"]) == 4


def test_apolarity_lift_of_lifted_ideal_is_itself():
    """An ideal that already has H = h_r needs no enlargement."""
    ring = projective_space(2, greek_aliases([2]))
    J = Ideal.from_strings(ring, ["a0*a1", "a0*a2", "a1*a2"])
    lift = apolarity_lift(J, 3)
    assert lift.b < lift.a
    assert lift.ideal is J


def test_apolarity_lift_preconditions(p1p1):
    """Wrong rings, wrong Hilbert polynomials and unsaturated inputs are refused."""
    with pytest.raises(PreconditionError):
        apolarity_lift(Ideal.from_strings(p1p1, ["a0"]), 2)
    with pytest.raises(PreconditionError):
        apolarity_lift(_line_and_power(2, 4), 3)
    ring = projective_space(2, greek_aliases([2]))
    unsaturated = Ideal.from_strings(ring, ["a0^2", "a0*a1", "a0*a2", "a1^4"])
    with pytest.raises(PreconditionError):
        apolarity_lift(unsaturated, 4)


def test_largest_monomial_check():
    """a0^3 is the largest monomial outside (a0, a1^4)_3^perp and escapes along a0 only."""
    J = _line_and_power(2, 4)
    check = largest_monomial_check(perp(J, 3), dual_monomials(J.ring, 2))
    assert check.monomial == (3, 0, 0)
    assert check.escaping == [0]
    assert check.largest_outside == (2, 0, 0)
    assert check.holds


def test_p1p1_construction_small():
    """The r = 4 ideal is monomial, has H = h_4 and saturation (b0, a0^4)."""
    construction = construct_p1p1_ideal(4)
    I = construction.ideal
    assert I.is_monomial()
    assert hf_matches_target(I, 4, DegreeBox.up_to((5, 5))).ok
    assert construction.embedding_degree.to_list() == [1, 4]
    assert construction.saturation.equals(Ideal.from_strings(I.ring, ["b0", "a0^4"]))
    assert saturate_irrelevant(I).equals(construction.saturation)


def test_p1p1_construction_needs_four_points():
    """Fewer than four points are refused."""
    with pytest.raises(PreconditionError):
        construct_p1p1_ideal(3)


def test_p1p1_order():
    """beta_0 > beta_1 > alpha_0 > alpha_1."""
    order = p1p1_order()
    assert order((0, 0, 1, 0)) > order((0, 0, 0, 1)) > order((1, 0, 0, 0)) > order((0, 1, 0, 0))


LIFT3_IDEALS = [
    ["a0*a1", "a0*a2", "a1*a2"],
    ["a0^2", "a0*a1", "a1^2"],
    ["a0^2", "a0*a1", "a1*a2"],
]


@pytest.mark.parametrize("generators", LIFT3_IDEALS)
def test_product_lift_of_three_points(generators):
    """Lifts to P^2 x P^1 are closed, have H = h_3 and restrict back."""
    ring_x = projective_space(2, greek_aliases([2]))
    ring_y = projective_space(1, ["b0", "b1"])
    I_x = Ideal.from_strings(ring_x, generators)
    lift = product_lift(I_x, ring_y, 3)
    J = lift.harvest()
    assert J.ring.names == ["a0", "a1", "a2", "b0", "b1"]
    assert lift.check_closure()
    assert hf_matches_target(J, 3, lift.default_box()).ok
    assert restrict_to_blocks(J, [0]).equals(I_x)


def test_product_lift_degree_classes():
    """Degrees split into classes A, B and C by where h_r reaches r."""
    ring_x = projective_space(2, greek_aliases([2]))
    lift = ProductLift(Ideal.from_strings(ring_x, LIFT3_IDEALS[0]), projective_space(1, ["b0", "b1"]), 3)
    assert lift.classify((1, 0)) == "A"
    assert lift.classify((0, 2)) == "B"
    assert lift.classify((0, 1)) == "C"
    assert lift.hf((0, 2)) == 3
    assert lift.piece((0, 1)) == ()


def test_product_lift_needs_h_r():
    """An input without H = h_r is refused."""
    ring_x = projective_space(2, greek_aliases([2]))
    with pytest.raises(PreconditionError):
        ProductLift(Ideal.from_strings(ring_x, ["a0", "a1"]), projective_space(1, ["b0", "b1"]), 3)


def _random_linear_change(ring, rng):
    """A random invertible linear change of coordinates of P^2 as a graded ring map."""
    while True:
        matrix = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        if sympy.Matrix(matrix).det() != 0:
            break
    R = ring.poly_ring()
    images = tuple(sum((QQ(c) * R.gens[j] for j, c in enumerate(row)), R.zero) for row in matrix)
    return GradedRingMap(ring, ring, images, ((1,),), name="change")


@pytest.mark.parametrize("seed", range(5))
def test_product_lift_after_coordinate_change(seed):
    """Lifting three points in general coordinates keeps H = h_3 and restricts back."""
    ring_x = projective_space(2, greek_aliases([2]))
    phi = _random_linear_change(ring_x, random.Random(seed))
    I_x = phi.image_ideal(Ideal.from_strings(ring_x, LIFT3_IDEALS[seed % 3]))
    lift = product_lift(I_x, projective_space(1, ["b0", "b1"]), 3)
    J = lift.harvest()
    assert hf_matches_target(J, 3, lift.default_box()).ok
    assert restrict_to_blocks(J, [0]).equals(I_x)


@pytest.mark.parametrize("n, k", [(2, 1), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_largest_monomial_on_random_subspaces(n, k):
    """For 40 random proper monomial subspaces at most one contraction escapes, onto the largest gap."""
    rng = random.Random(1000 * n + k)
    ring = projective_space(n, greek_aliases([n]))
    monomials = dual_monomials(ring, k)
    lower = dual_monomials(ring, k - 1)
    for _ in range(40):
        chosen = rng.sample(range(len(monomials)), rng.randrange(len(monomials)))
        V = DualSpaceBasis.span(k, monomials, [{j: QQ.one} for j in chosen])
        check = largest_monomial_check(V, lower)
        assert check.monomial not in [monomials[j] for j in chosen]
        assert len(check.escaping) <= 1
        assert check.holds


@pytest.mark.parametrize("generators", [
    ["a0", "a1^4"],
    ["a0*a1", "a0*a2", "a1*a2"],
    ["a0^2 - a1*a2", "a1^3"],
    ["a0^3", "a0*a1^2", "a0^2*a2", "a0*a1*a2", "a0*a2^4", "a1^6"],
])
def test_perp_duality_up_to_degree_five(generators):
    """dim I_k + dim I_k^perp = dim S_k for every k <= 5."""
    ring = projective_space(2, greek_aliases([2]))
    I = Ideal.from_strings(ring, generators)
    for k in range(6):
        assert I.dim_piece((k,)) + perp(I, k).dim == ring.dim_graded_piece((k,))
