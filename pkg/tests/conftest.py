import random
from itertools import combinations

import pytest
import sympy
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from slipcheck.algebra.polynomials import polynomial_degree
from slipcheck.algebra.rings import greek_aliases, hirzebruch, product_of_projective_spaces, projective_space
from slipcheck.groebner.ideal import Ideal


def _rank(rows):
    """Exact rank of a nonempty list of equal-length rows."""
    rows = [[sympy.sympify(x) for x in row] for row in rows]
    return DomainMatrix.from_list_sympy(len(rows), len(rows[0]), rows).convert_to(QQ).rank()


def _dense_dim_piece(ring, generators, degree):
    """dim I_D as the rank of all products m * g, without Groebner bases."""
    degree = ring.degree(degree)
    monomials = ring.monomials_of_degree(degree)
    index = {m: j for j, m in enumerate(monomials)}
    rows = _dense_rows(ring, generators, degree, index)
    if not rows:
        return 0
    return _rank(rows)


def _dense_rows(ring, generators, degree, index):
    rows = {}
    for g in generators:
        for m in ring.monomials_of_degree(degree - polynomial_degree(ring, g)):
            row = [0] * len(index)
            for mm, c in g.mul_monom(m).items():
                row[index[mm]] = QQ.to_sympy(c)
            rows.setdefault(tuple(row))
    return [list(row) for row in rows]


def _dense_hf(I, degree):
    return I.ring.dim_graded_piece(degree) - _dense_dim_piece(I.ring, I.generators, degree)


def _dense_member(I, f):
    """f in span{m * g} in the degree of f, by ranks."""
    ring = I.ring
    degree = polynomial_degree(ring, f)
    index = {m: j for j, m in enumerate(ring.monomials_of_degree(degree))}
    rows = _dense_rows(ring, I.generators, degree, index)
    target = [0] * len(index)
    for m, c in f.items():
        target[index[m]] = QQ.to_sympy(c)
    if not rows:
        return not any(target)
    return _rank(rows + [target]) == _rank(rows)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _dense_hom_dim(ring, monomials):
    """dim Hom(J, S/J)_0 for a monomial ideal J, by solving for the images of the generators.

    A degree-0 map sends g_j to h_j in (S/J)_{deg g_j}; it is well defined iff
    (L / g_j) h_j = (L / g_k) h_k in S/J for every pair with L = lcm(g_j, g_k).
    """
    gens = sorted(set(monomials))
    gens = [g for g in gens if not any(h != g and _divides(h, g) for h in gens)]

    def standard(m):
        return [s for s in ring.monomials_of_degree(ring.degree_of_monomial(m))
                if not any(_divides(g, s) for g in gens)]

    columns = {(j, s): c for c, (j, s) in enumerate((j, s) for j, g in enumerate(gens) for s in standard(g))}
    if not columns:
        return 0
    rows = []
    for j, k in combinations(range(len(gens)), 2):
        lcm = tuple(max(x, y) for x, y in zip(gens[j], gens[k]))
        target = {t: i for i, t in enumerate(standard(lcm))}
        block = [[0] * len(columns) for _ in target]
        for idx, sign in ((j, 1), (k, -1)):
            shift = tuple(x - y for x, y in zip(lcm, gens[idx]))
            for s in standard(gens[idx]):
                t = tuple(x + y for x, y in zip(shift, s))
                if t in target:
                    block[target[t]][columns[(idx, s)]] += sign
        rows.extend(block)
    if not rows:
        return len(columns)
    return len(columns) - _rank(rows)


def _random_monomials(ring, rng, count, degrees):
    """``count`` random monomials, each of a degree drawn from ``degrees``."""
    return [rng.choice(ring.monomials_of_degree(rng.choice(degrees))) for _ in range(count)]


def _random_binomial_ideal(ring, rng, count=3, top=2):
    """``count`` random homogeneous binomials with small integer coefficients."""
    R = ring.poly_ring()
    generators = []
    while len(generators) < count:
        degree = [rng.randint(0, top) for _ in range(ring.pic_rank)]
        if not any(degree):
            continue
        monomials = ring.monomials_of_degree(degree)
        m1, m2 = rng.choice(monomials), rng.choice(monomials)
        g = R({m1: QQ(rng.randint(1, 3))}) + R({m2: QQ(rng.randint(-3, 3))})
        if g:
            generators.append(g)
    return Ideal(ring, generators)


@pytest.fixture
def dense_hf():
    """Hilbert function of S/I by dense linear algebra."""
    return _dense_hf


@pytest.fixture
def dense_member():
    """Membership by dense linear algebra in the degree of f."""
    return _dense_member


@pytest.fixture
def dense_hom_dim():
    return _dense_hom_dim


@pytest.fixture
def random_monomials():
    return _random_monomials


@pytest.fixture
def random_binomial_ideal():
    return _random_binomial_ideal


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def p1p1():
    return product_of_projective_spaces([1, 1], greek_aliases([1, 1]))


@pytest.fixture
def p2():
    return projective_space(2, greek_aliases([2]))


@pytest.fixture
def p2p1():
    return product_of_projective_spaces([2, 1], greek_aliases([2, 1]))


@pytest.fixture
def h1():
    return hirzebruch(1)


@pytest.fixture
def two_points(p1p1):
    """Two points on P^1 x P^1 with H = h_2."""
    return Ideal.from_strings(p1p1, ["b0*b1", "a0*b0", "a1*b0", "a0^2"])
