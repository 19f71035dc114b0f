"""
Monomial orders on exponent vectors.

Every order is a sympy ``MonomialOrder`` so it can be handed to ``PolyRing``
directly. Orders compare by value (class + parameters), which keeps sympy's
ring cache from mixing rings that only differ in their order.
"""
from typing import Iterable, Optional, Sequence, Tuple

from sympy.polys.orderings import MonomialOrder

from ..errors import InputError


class _ParamOrder(MonomialOrder):
    is_global = True
    is_default = False

    def _params(self) -> tuple:
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._params() == other._params()

    def __hash__(self):
        return hash((type(self).__name__, self._params()))

    def __repr__(self):
        return f"{type(self).__name__}{self._params()!r}"

    def __str__(self):
        return self.alias


class LexOrder(_ParamOrder):
    """Lexicographic order; ``priority[0]`` is the largest variable."""

    alias = "lex"

    def __init__(self, priority: Sequence[int]):
        self.priority = tuple(priority)

    def _params(self):
        return (self.priority,)

    def __call__(self, monomial):
        return tuple(monomial[i] for i in self.priority)


class GrevlexOrder(_ParamOrder):
    """Weighted degree first, then reverse lexicographic.

    ``priority`` lists variables from largest to smallest; ties in weighted
    degree are broken by the smallest exponent of the last variable.
    """

    alias = "grevlex"

    def __init__(self, priority: Sequence[int], weights: Optional[Sequence[int]] = None):
        self.priority = tuple(priority)
        if weights is None:
            weights = (1,) * (max(self.priority) + 1 if self.priority else 0)
        self.weights = tuple(weights)

    def _params(self):
        return (self.priority, self.weights)

    def __call__(self, monomial):
        degree = sum(self.weights[i] * monomial[i] for i in self.priority)
        return (degree, tuple(-monomial[i] for i in reversed(self.priority)))


class BlockOrder(_ParamOrder):
    """Product order: compare the first block with its own order, then the next.

    ``parts`` is a sequence of ``(indices, order)`` where ``order`` acts on the
    exponent vector restricted to ``indices`` (re-indexed from 0).
    """

    alias = "block"

    def __init__(self, parts: Iterable[Tuple[Sequence[int], MonomialOrder]]):
        self.parts = tuple((tuple(idx), order) for idx, order in parts)

    def _params(self):
        return self.parts

    def __call__(self, monomial):
        return tuple(order(tuple(monomial[i] for i in idx)) for idx, order in self.parts)


class PositionOverTermOrder(_ParamOrder):
    """Order on module monomials encoded as ``(e_0..e_{p-1}, x...)`` exponents.

    The position variables come first and are compared lexicographically so
    that ``e_0`` is the largest position; inside one position the base order
    decides.
    """

    alias = "pot"

    def __init__(self, rank: int, base: MonomialOrder):
        self.rank = rank
        self.base = base

    def _params(self):
        return (self.rank, self.base)

    def __call__(self, monomial):
        return (tuple(monomial[: self.rank]), self.base(monomial[self.rank:]))


def grevlex(n: int, weights: Optional[Sequence[int]] = None) -> GrevlexOrder:
    return GrevlexOrder(range(n), weights)


def lex(n: int) -> LexOrder:
    return LexOrder(range(n))


def elimination_order(n: int, eliminated: Iterable[int], weights: Optional[Sequence[int]] = None) -> BlockOrder:
    """Block order with the eliminated variables in a dominating grevlex block."""
    eliminated = sorted(set(eliminated))
    kept = [i for i in range(n) if i not in set(eliminated)]
    weights = tuple(weights) if weights is not None else (1,) * n
    parts = []
    if eliminated:
        parts.append((eliminated, GrevlexOrder(range(len(eliminated)), [weights[i] for i in eliminated])))
    if kept:
        parts.append((kept, GrevlexOrder(range(len(kept)), [weights[i] for i in kept])))
    return BlockOrder(parts)


def product_order(blocks: Sequence[Sequence[int]], weights: Optional[Sequence[int]] = None) -> BlockOrder:
    """Block order over the given variable blocks, grevlex inside each block."""
    n = sum(len(b) for b in blocks)
    weights = tuple(weights) if weights is not None else (1,) * n
    return BlockOrder((tuple(b), GrevlexOrder(range(len(b)), [weights[i] for i in b])) for b in blocks)


def order_from_name(name: str, n: int, weights: Optional[Sequence[int]] = None,
                    blocks: Optional[Sequence[Sequence[int]]] = None) -> MonomialOrder:
    """Resolve ``lex``, ``grevlex`` or ``product`` with the ring's declared variable order."""
    if name == "lex":
        return lex(n)
    if name == "grevlex":
        return grevlex(n, weights)
    if name == "product":
        return product_order(blocks or [tuple(range(n))], weights)
    raise InputError(f"unknown monomial order {name!r} (expected lex, grevlex or product)")
