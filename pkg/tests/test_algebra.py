import random

import pytest

from slipcheck.algebra import (
    DegreeBox,
    MultiDegree,
    format_polynomial,
    hirzebruch,
    is_homogeneous,
    order_from_name,
    parse_polynomial,
    product_of_projective_spaces,
    projective_space,
    ring_from_descriptor,
)
from slipcheck.algebra.orders import GrevlexOrder, LexOrder, elimination_order, grevlex, lex, product_order
from slipcheck.algebra.polynomials import polynomial_degree, transfer
from slipcheck.errors import DegreeMismatchError, InputError, NotHomogeneousError, RingMismatchError


def test_multidegree_arithmetic():
    """Sums, differences and joins are componentwise."""
    u, v = MultiDegree((1, 3)), MultiDegree((2, 0))
    assert u + v == MultiDegree((3, 3))
    assert u - v == MultiDegree((-1, 3))
    assert u.join(v) == MultiDegree((2, 3))
    assert u.meet(v) == MultiDegree((1, 0))
    assert v.scale(3).to_list() == [6, 0]
    assert u.total() == 4


def test_multidegree_partial_order():
    """<= compares every coordinate, so some pairs are incomparable."""
    u, v = MultiDegree((1, 3)), MultiDegree((2, 0))
    assert not u <= v and not v <= u
    assert MultiDegree((1, 1)) < MultiDegree((1, 2))
    assert not MultiDegree((1, 1)) < MultiDegree((1, 1))


def test_multidegree_length_mismatch():
    """Adding degrees of different Pic ranks is an error."""
    with pytest.raises(DegreeMismatchError):
        MultiDegree((1, 2)) + MultiDegree((1,))


def test_multidegree_of_rejects_garbage():
    """Non-integer input is an input error."""
    with pytest.raises(InputError):
        MultiDegree.of(object())


def test_degree_box_iteration():
    """A box visits every degree between its corners, lexicographically."""
    box = DegreeBox.up_to((1, 2))
    assert len(box) == 6
    assert [d.to_list() for d in box][:3] == [[0, 0], [0, 1], [0, 2]]
    assert (1, 1) in box and (2, 0) not in box
    assert box.to_json() == {"lower": [0, 0], "upper": [1, 2]}


def test_degree_box_requires_ordered_corners():
    """The lower corner must lie below the upper one."""
    with pytest.raises(InputError):
        DegreeBox(MultiDegree((2, 0)), MultiDegree((1, 1)))


@pytest.mark.parametrize("ns, degree, expected", [
    ([2], (2,), 6),
    ([1, 1], (1, 2), 6),
    ([3, 3, 3], (1, 1, 1), 64),
    ([5, 5, 5], (1, 1, 0), 36),
])
def test_product_piece_dimensions(ns, degree, expected):
    """dim S_D is a product of binomial coefficients on products."""
    assert product_of_projective_spaces(ns).dim_graded_piece(degree) == expected


@pytest.mark.parametrize("a, degree, expected", [
    (1, (1, 1), 3),
    (1, (2, 1), 5),
    (2, (1, 1), 2),
    (2, (2, 1), 4),
    (0, (1, 1), 4),
])
def test_hirzebruch_piece_dimensions(a, degree, expected):
    """Hirzebruch pieces count the monomials a2^k a4^(u2-k) times forms in a1, a3."""
    assert hirzebruch(a).dim_graded_piece(degree) == expected


@pytest.mark.parametrize("ring", [
    projective_space(2), product_of_projective_spaces([1, 2]), hirzebruch(1), hirzebruch(2),
])
def test_monomial_count_matches_dimension(ring):
    """Enumerated monomials agree with the closed formula on a window."""
    for degree in DegreeBox.up_to([3] * ring.pic_rank):
        monomials = ring.monomials_of_degree(degree)
        assert len(monomials) == ring.dim_graded_piece(degree)
        assert all(ring.degree_of_monomial(m) == degree for m in monomials)


def test_negative_degree_piece_is_empty(h1):
    """Non-effective degrees have no monomials."""
    assert h1.dim_graded_piece((-1, 2)) == 0
    assert h1.monomials_of_degree((-1, 2)) == ()


def test_hirzebruch_nef_cone():
    """On H_a the nef cone is spanned by (1,0) and (a,1)."""
    ring = hirzebruch(2)
    assert ring.is_nef((2, 1))
    assert not ring.is_nef((1, 1))
    assert ring.is_effective((1, 1))


def test_hirzebruch_variable_degrees(h1):
    """alpha_2 has degree (a, 1)."""
    assert [v.degree.to_list() for v in h1.variables] == [[1, 0], [1, 1], [1, 0], [0, 1]]
    assert h1.irrelevant_blocks == ((0, 2), (1, 3))


def test_factor_ring_keeps_aliases(p2p1):
    """The ring of a factor reuses the variable names."""
    sub, kept = p2p1.factor_ring([1])
    assert sub.names == ["b0", "b1"]
    assert kept == [3, 4]


def test_factor_ring_rejects_bad_selection(p1p1):
    """Factor indices outside the product are rejected."""
    with pytest.raises(InputError):
        p1p1.factor_ring([2])


def test_ring_from_descriptor():
    """Descriptors name a family and its parameters."""
    assert str(ring_from_descriptor({"family": "product_projective", "ns": [1, 2]})) == "P^1 x P^2"
    assert str(ring_from_descriptor({"family": "hirzebruch", "a": 3})) == "Hirzebruch(3)"
    with pytest.raises(InputError):
        ring_from_descriptor({"family": "grassmannian"})
    with pytest.raises(InputError):
        ring_from_descriptor({"family": "projective"})


def test_order_from_name():
    """lex, grevlex and product resolve; anything else is an input error."""
    assert order_from_name("lex", 3) == LexOrder((0, 1, 2))
    assert order_from_name("grevlex", 3) == GrevlexOrder((0, 1, 2))
    with pytest.raises(InputError):
        order_from_name("deglex", 3)


def test_grevlex_breaks_ties_on_last_variable():
    """Among equal degrees the monomial with the smaller last exponent is larger."""
    order = GrevlexOrder((0, 1, 2))
    assert order((1, 0, 1)) < order((0, 2, 0))
    assert order((0, 0, 3)) < order((2, 0, 0))


@pytest.mark.parametrize("order", [
    lex(4),
    grevlex(4),
    grevlex(4, [1, 1, 2, 3]),
    product_order([(2, 3), (0, 1)]),
    elimination_order(4, [1, 3]),
], ids=str)
def test_orders_are_total_and_multiplicative(order):
    """m1 < m2 implies m1 n < m2 n, and distinct monomials never tie."""
    rng = random.Random(31)
    for _ in range(200):
        m1, m2, n = (tuple(rng.randint(0, 3) for _ in range(4)) for _ in range(3))
        if m1 == m2:
            continue
        assert order(m1) != order(m2)
        if order(m1) > order(m2):
            m1, m2 = m2, m1
        assert order(tuple(a + b for a, b in zip(m1, n))) < order(tuple(a + b for a, b in zip(m2, n)))


def test_parse_polynomial_aliases_and_caret(p1p1):
    """Aliases, ^ for powers and rational coefficients parse."""
    f = parse_polynomial(p1p1, "a0^2*b1 - 3/2*a0*a1*b0")
    assert polynomial_degree(p1p1, f) == MultiDegree((2, 1))
    text = format_polynomial(f)
    assert "**" not in text and "a0^2*b1" in text
    assert parse_polynomial(p1p1, text) == f


def test_parse_polynomial_internal_names(p1p1):
    """Internal variable names work next to the aliases."""
    assert parse_polynomial(p1p1, "x0_0*x1_1") == parse_polynomial(p1p1, "a0*b1")


def test_parse_polynomial_rejects_inhomogeneous(p1p1):
    """Mixed degrees are refused unless explicitly allowed."""
    with pytest.raises(NotHomogeneousError):
        parse_polynomial(p1p1, "a0 + b0")
    f = parse_polynomial(p1p1, "a0 + b0", homogeneous=False)
    assert not is_homogeneous(p1p1, f)


def test_parse_polynomial_rejects_unknown_names(p2):
    """Unknown variables are input errors."""
    with pytest.raises(InputError):
        parse_polynomial(p2, "a0*z")


def test_transfer_requires_counterparts(p1p1, p2):
    """Re-indexing fails when a used variable has no image."""
    f = parse_polynomial(p1p1, "a0*b0")
    with pytest.raises(RingMismatchError):
        transfer(f, p2.poly_ring(), [0, 1, None, None])
