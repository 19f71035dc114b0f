"""
Exact linear algebra over QQ on sparse row vectors.

Vectors are ``{column: coefficient}`` dicts; every helper guards the empty
shapes sympy's ``DomainMatrix`` does not like.
"""
from typing import Dict, Iterable, List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

Vector = Dict[int, object]


def to_matrix(rows: Sequence[Vector], ncols: int) -> DomainMatrix:
    data = {}
    for i, row in enumerate(rows):
        entries = {j: QQ.convert(c) for j, c in row.items() if c}
        if entries:
            data[i] = entries
    return DomainMatrix(data, (len(rows), ncols), QQ)


def rank(rows: Sequence[Vector], ncols: int) -> int:
    rows = [r for r in rows if any(r.values())]
    if not rows or ncols == 0:
        return 0
    return to_matrix(rows, ncols).rank()


def rref_rows(rows: Sequence[Vector], ncols: int) -> Tuple[List[Vector], Tuple[int, ...]]:
    """Nonzero rows of the reduced row echelon form, with the pivot columns."""
    rows = [r for r in rows if any(r.values())]
    if not rows or ncols == 0:
        return [], ()
    reduced, pivots = to_matrix(rows, ncols).rref()
    sdm = reduced.to_sdm()
    return [dict(sdm[i]) for i in sorted(sdm) if sdm[i]], tuple(pivots)


def nullspace(rows: Sequence[Vector], ncols: int) -> List[Vector]:
    """A basis of ``{v : row . v = 0 for every row}``."""
    if ncols == 0:
        return []
    rows = [r for r in rows if any(r.values())]
    if not rows:
        return [{j: QQ.one} for j in range(ncols)]
    basis = to_matrix(rows, ncols).nullspace().to_sdm()
    return [dict(basis[i]) for i in sorted(basis) if basis[i]]


def in_span(vectors: Sequence[Vector], v: Vector, ncols: int) -> bool:
    if not any(v.values()):
        return True
    return rank(list(vectors) + [v], ncols) == rank(vectors, ncols)


def dot(u: Vector, v: Vector):
    if len(u) > len(v):
        u, v = v, u
    return sum((c * v[j] for j, c in u.items() if j in v), QQ.zero)


def combine(vectors: Iterable[Tuple[object, Vector]]) -> Vector:
    """Sum of ``c * v`` over the pairs, zeros dropped."""
    out: Vector = {}
    for c, v in vectors:
        for j, x in v.items():
            y = out.get(j, QQ.zero) + c * x
            if y:
                out[j] = y
            else:
                out.pop(j, None)
    return out
