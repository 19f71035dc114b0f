import pytest

from slipcheck.algebra.polynomials import parse_polynomial
from slipcheck.algebra.rings import hirzebruch, projective_space
from slipcheck.errors import DegreeMismatchError, NotGradedError, PreconditionError
from slipcheck.groebner import Ideal
from slipcheck.ringmaps import (
    GradedRingMap,
    ToricLiftData,
    blowdown_lift,
    check_embedding_conditions,
    check_lift_B_condition,
    factor_inclusion,
    map_rank,
    preimage,
    preimage_piece_dim,
    preimage_report,
    restrict_to_factor,
    saturation_preserved,
    segre_map,
    toric_lift_identity_check,
)


@pytest.fixture
def blowdown():
    phi, data = blowdown_lift()
    return phi, data


@pytest.fixture
def fiber(blowdown):
    phi, _ = blowdown
    return Ideal.from_strings(phi.target, ["a3^2", "a2"])


def _line(names=("t1", "t2")):
    return projective_space(1, list(names))


def test_map_validation(p1p1):
    """Counts, matrix shapes and image degrees are checked up front."""
    a0, a1, b0 = (parse_polynomial(p1p1, v) for v in ("a0", "a1", "b0"))
    GradedRingMap(_line(), p1p1, (a0, a1), ((1,), (0,)))
    with pytest.raises(NotGradedError):
        GradedRingMap(_line(), p1p1, (a0,), ((1,), (0,)))
    with pytest.raises(DegreeMismatchError):
        GradedRingMap(_line(), p1p1, (a0, a1), ((1,),))
    with pytest.raises(NotGradedError):
        GradedRingMap(_line(), p1p1, (a0, b0), ((1,), (0,)))
    mixed = parse_polynomial(p1p1, "a0 + b0", homogeneous=False)
    with pytest.raises(NotGradedError):
        GradedRingMap(_line(), p1p1, (a0, mixed), ((1,), (0,)))


def test_factor_inclusion_applies_identically(p1p1):
    """The second factor's ring maps onto its own variables."""
    phi = factor_inclusion(p1p1, [2])
    assert phi.source.names == ["b0", "b1"]
    assert phi.apply(parse_polynomial(phi.source, "b0*b1^2")) == parse_polynomial(p1p1, "b0*b1^2")
    assert phi.map_degree((3,)).to_list() == [0, 3]


def test_blowdown_preimage(blowdown, fiber):
    """The fiber (a3^2, a2) pulls back to (b0^2, b2)."""
    phi, _ = blowdown
    expected = Ideal.from_strings(phi.source, ["b0^2", "b2"])
    assert preimage(phi, fiber).equals(expected)
    assert preimage_piece_dim(phi, fiber, (2,)) == 4
    assert map_rank(phi, (1,)) == (3, 3)


def test_blowdown_image(blowdown):
    """(b1, b2^2) pushes forward to (a1 a4, a2^2)."""
    phi, _ = blowdown
    image = phi.image_ideal(Ideal.from_strings(phi.source, ["b1", "b2^2"]))
    assert image.equals(Ideal.from_strings(phi.target, ["a1*a4", "a2^2"]))


def test_preimage_needs_the_target_ring(blowdown, p1p1):
    """Ideals of other rings are refused."""
    phi, _ = blowdown
    with pytest.raises(PreconditionError):
        preimage(phi, Ideal.from_strings(p1p1, ["a0"]))


def test_preimage_report(blowdown, fiber):
    """A saturated fiber under a map with the B-condition stays saturated."""
    phi, _ = blowdown
    report = preimage_report(phi, fiber)
    assert report.input_saturated
    assert report.b_condition
    assert report.output_saturated is True
    data = report.to_json()
    assert data["surjectivity"]
    assert set(data["surjectivity"][0]) == {"degree", "rank", "target_dim", "surjective"}
    assert saturation_preserved(phi, fiber)


def test_toric_identity(blowdown):
    """The blow-down satisfies the identity; swapping delta breaks it."""
    phi, data = blowdown
    assert toric_lift_identity_check(phi, data)
    swapped = ToricLiftData(data.source_rays, data.target_rays, ((0, 1), (1, 0)))
    assert not toric_lift_identity_check(phi, swapped)


def test_toric_data_shapes():
    """delta must map one lattice to the other."""
    with pytest.raises(DegreeMismatchError):
        ToricLiftData(((1, 0),), ((1, 0, 0),), ((1, 0),))


def test_b_condition(blowdown, p1p1):
    """The blow-down pulls the irrelevant ideal back into its radical; a map through b0 does not."""
    phi, _ = blowdown
    assert check_lift_B_condition(phi)
    images = tuple(parse_polynomial(p1p1, t) for t in ("a0*b0", "a1*b0"))
    assert not check_lift_B_condition(GradedRingMap(_line(), p1p1, images, ((1,), (1,))))


def test_segre_map(p1p1):
    """|(1,1)| on P^1 x P^1 comes from P^3."""
    phi = segre_map(p1p1, (1, 1))
    assert phi.source.nvars == 4
    assert phi.source.names[0] == "t1"
    assert phi.degree_map == ((1,), (1,))
    assert phi.to_json()["degreeMap"] == [[1], [1]]


def test_segre_map_preconditions(p1p1):
    """Zero degrees and degrees with too few sections are refused."""
    with pytest.raises(PreconditionError):
        segre_map(p1p1, (0, 0))
    with pytest.raises(PreconditionError):
        segre_map(p1p1, (1, 0), r=3)


def test_embedding_conditions_hold_for_segre(p1p1):
    """(1,1) on P^1 x P^1 meets all three conditions."""
    report = check_embedding_conditions(p1p1, (1, 1), 2)
    assert report.k == 3
    assert report.holds
    assert report.to_json()["holds"] is True


def test_embedding_conditions_fail_on_fiber_class():
    """(0,1) on Hirzebruch(1) misses the irrelevant locus condition."""
    report = check_embedding_conditions(hirzebruch(1), (0, 1), 2)
    assert report.generated
    assert report.hilbert_match
    assert not report.radical
    assert not report.holds


def test_restrict_to_factor(two_points):
    """Only a0^2 survives on the first factor."""
    J = restrict_to_factor(two_points, [1])
    assert J.equals(Ideal.from_strings(J.ring, ["a0^2"]))


@pytest.mark.parametrize("factors", [[0], [3], [1, -1]])
def test_restrict_to_factor_checks_indices(two_points, factors):
    """Indices outside 1..d are refused."""
    with pytest.raises(PreconditionError):
        restrict_to_factor(two_points, factors)
