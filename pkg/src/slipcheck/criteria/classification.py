"""
Which multigraded Hilbert schemes of r points on a product of projective
spaces are irreducible.
"""
from typing import Sequence

from ..algebra.rings import CoxRing
from ..errors import InputError


def slip_dim(ring: CoxRing, r: int) -> int:
    """r * dim X."""
    return r * ring.dim


def classify_products(r: int, ns: Sequence[int]) -> dict:
    """Irreducible exactly when r = 1, or X = P^1, or X = P^n with r <= 3.

    The reason names the argument that shows reducibility: a projection onto
    a factor P^n with n >= 2, a projection onto P^1 x P^1, or the two- and
    three-point examples on two factors.
    """
    ns = [int(n) for n in ns]
    if r < 1 or not ns or any(n < 1 for n in ns):
        raise InputError(f"classification needs positive integers, got r={r}, ns={ns}")
    d = len(ns)
    if r == 1:
        return {"irreducible": True, "reason": "one point"}
    if d == 1 and ns[0] == 1:
        return {"irreducible": True, "reason": "projective line"}
    if d == 1 and r <= 3:
        return {"irreducible": True, "reason": "projective space with r <= 3"}
    if r >= 4 and max(ns) >= 2:
        return {"irreducible": False, "reason": f"projection onto P^{max(ns)}, reducible for r >= 4"}
    if r >= 4:
        return {"irreducible": False, "reason": "projection onto P^1 x P^1, reducible for r >= 4"}
    return {"irreducible": False, "reason": f"{r}-point example on two factors"}


def classify_pn(n: int, r: int) -> dict:
    """On P^n: reducible exactly when n >= 2 and r >= 4."""
    return classify_products(r, [n])
