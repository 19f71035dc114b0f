import pytest

from slipcheck.algebra.polynomials import parse_polynomial
from slipcheck.groebner import Ideal, module_syzygies, syzygies


def _annihilates(ring, rows, vectors, rank):
    R = ring.poly_ring()
    for row in rows:
        for k in range(rank):
            total = R.zero
            for i, a in row.items():
                total += a * vectors[i].get(k, R.zero)
            if total:
                return False
    return True


def test_koszul_syzygies(p2):
    """The variables of P^2 have the three Koszul relations."""
    syz = syzygies(Ideal.from_strings(p2, ["a0", "a1", "a2"]))
    assert len(syz) >= 3
    assert syz.check()
    assert all(syz.row_degree(row).to_list() == [2] for row in syz.rows)


@pytest.mark.parametrize("generators", [
    ["a0^2 - a1*a2", "a1^2 - a0*a2", "a2^2 - a0*a1"],
    ["a0*a1", "a0*a2", "a1*a2"],
    ["a0^3", "a0*a1^2", "a0^2*a2", "a0*a1*a2", "a0*a2^4", "a1^6"],
])
def test_syzygies_annihilate_generators(p2, generators):
    """Every returned row is a relation among the generators."""
    syz = syzygies(Ideal.from_strings(p2, generators))
    assert syz.rows
    assert syz.check()


def test_syzygies_of_a_generator_and_its_multiple(p1p1):
    """g and a0 g satisfy a0 * g - 1 * (a0 g) = 0."""
    syz = syzygies(Ideal.from_strings(p1p1, ["a1*b0 - a0*b1", "a0*a1*b0 - a0^2*b1"]))
    assert syz.check()
    assert len(syz) >= 1


def test_syzygy_matrix_strings(p2):
    """Rows print as polynomial strings with zeros filled in."""
    syz = syzygies(Ideal.from_strings(p2, ["a0", "a1"]))
    matrix = syz.as_matrix()
    assert len(matrix) == 1
    assert len(matrix[0]) == 2 and "0" not in matrix[0]


def test_module_syzygies(p2):
    """Relations among vectors of S^2 annihilate every coordinate."""
    R = p2.poly_ring()
    a0, a1, a2 = (parse_polynomial(p2, v) for v in ("a0", "a1", "a2"))
    vectors = [{0: a1, 1: -a0}, {0: a2, 1: R.zero}, {0: a1 * a2, 1: -a0 * a2}]
    rows = [{k: v for k, v in vec.items() if v} for vec in vectors]
    degrees = [p2.degree((0,)), p2.degree((0,))]
    relations = module_syzygies(p2, rows, 2, degrees)
    assert relations
    assert _annihilates(p2, relations, rows, 2)


def test_module_syzygies_empty(p2):
    """No vectors, no relations."""
    assert module_syzygies(p2, [], 2, [p2.degree((0,)), p2.degree((0,))]) == []
