"""
Cox rings of the built-in toric families.

A ``CoxRing`` is a plain descriptor: variables with their blocks and
multidegrees, the Pic rank, dim X, the nef cone generators and the block
structure of the irrelevant ideal. Polynomial arithmetic happens in sympy
``PolyRing`` objects obtained from :meth:`CoxRing.poly_ring`.
"""
import functools
import itertools
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, Symbol
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyRing

from ..errors import DegreeMismatchError, InputError
from .degrees import DegreeLike, MultiDegree
from .orders import GrevlexOrder, order_from_name

Monomial = Tuple[int, ...]

PROJECTIVE = "projective"
PRODUCT = "product_projective"
HIRZEBRUCH = "hirzebruch"

_BLOCK_LETTERS = "abcdefghijklmnopqrsuvwyz"


@dataclass(frozen=True)
class Variable:
    name: str
    block: int
    degree: MultiDegree
    alias: Optional[str] = None

    @property
    def display(self) -> str:
        return self.alias or self.name


@dataclass(frozen=True)
class CoxRing:
    family: str
    params: Tuple[int, ...]
    variables: Tuple[Variable, ...]
    pic_rank: int
    dim: int
    nef_generators: Tuple[MultiDegree, ...]
    irrelevant_blocks: Tuple[Tuple[int, ...], ...]
    _lookup: Dict[str, int] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        lookup = {}
        for i, var in enumerate(self.variables):
            lookup[var.name] = i
            if var.alias:
                lookup[var.alias] = i
        object.__setattr__(self, "_lookup", lookup)

    # -- basic data ---------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def names(self) -> List[str]:
        return [v.display for v in self.variables]

    @property
    def symbols(self) -> Tuple[Symbol, ...]:
        return tuple(Symbol(v.display) for v in self.variables)

    @property
    def is_product(self) -> bool:
        return self.family in (PROJECTIVE, PRODUCT)

    @property
    def ns(self) -> Tuple[int, ...]:
        if not self.is_product:
            raise InputError(f"{self.family} ring has no projective factors")
        return self.params

    @property
    def weights(self) -> Tuple[int, ...]:
        """Positive weight per variable: the coordinate sum of its degree."""
        return tuple(v.degree.total() for v in self.variables)

    @property
    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        nblocks = max(v.block for v in self.variables) + 1
        return tuple(tuple(i for i, v in enumerate(self.variables) if v.block == b) for b in range(nblocks))

    def block_indices(self, block: int) -> Tuple[int, ...]:
        return self.blocks[block]

    def index(self, name: str) -> int:
        try:
            return self._lookup[name]
        except KeyError:
            raise InputError(f"unknown variable {name!r}") from None

    def degree(self, value: DegreeLike) -> MultiDegree:
        d = MultiDegree.of(value)
        if len(d) != self.pic_rank:
            raise DegreeMismatchError(f"degree {d} does not have Pic rank {self.pic_rank}")
        return d

    @property
    def irrelevant_generators(self) -> Tuple[Monomial, ...]:
        """Monomial generators of B(X): one variable from every irrelevant block."""
        gens = []
        for choice in itertools.product(*self.irrelevant_blocks):
            exps = [0] * self.nvars
            for i in choice:
                exps[i] += 1
            gens.append(tuple(exps))
        return tuple(gens)

    # -- orders and sympy rings ---------------------------------------------
    def default_order(self) -> GrevlexOrder:
        return GrevlexOrder(range(self.nvars), self.weights)

    def poly_ring(self, order: Optional[MonomialOrder] = None) -> PolyRing:
        return PolyRing(self.symbols, QQ, order or self.default_order())

    def order(self, name: str) -> MonomialOrder:
        """``lex``, ``grevlex`` or ``product`` (grevlex per block) on this ring."""
        return order_from_name(name, self.nvars, self.weights, self.blocks)

    # -- degrees and graded pieces ------------------------------------------
    def degree_of_monomial(self, exps: Sequence[int]) -> MultiDegree:
        coords = [0] * self.pic_rank
        for e, var in zip(exps, self.variables):
            if e:
                for k in range(self.pic_rank):
                    coords[k] += e * var.degree[k]
        return MultiDegree(coords)

    def is_effective(self, d: DegreeLike) -> bool:
        # The effective cone is the positive orthant for every built-in family.
        return self.degree(d).is_nonnegative()

    def is_nef(self, d: DegreeLike) -> bool:
        d = self.degree(d)
        if self.family == HIRZEBRUCH:
            a = self.params[0]
            return d[1] >= 0 and d[0] - a * d[1] >= 0
        return d.is_nonnegative()

    def dim_graded_piece(self, d: DegreeLike) -> int:
        d = self.degree(d)
        if not self.is_effective(d):
            return 0
        if self.is_product:
            return math.prod(math.comb(n + u, n) for n, u in zip(self.ns, d))
        a = self.params[0]
        return sum(d[0] - a * k + 1 for k in range(d[1] + 1) if d[0] - a * k >= 0)

    def monomials_of_degree(self, d: DegreeLike, order: Optional[MonomialOrder] = None) -> Tuple[Monomial, ...]:
        """All monomials of degree ``d``, largest first under ``order``."""
        d = self.degree(d)
        if not self.is_effective(d):
            return ()
        order = order or self.default_order()
        return tuple(sorted(_monomials(self, d.coords), key=order, reverse=True))

    def factor_ring(self, blocks: Sequence[int]) -> Tuple["CoxRing", List[int]]:
        """The Cox ring of the product of the chosen factors, with the kept variable indices."""
        if not self.is_product:
            raise InputError("factor rings exist only for products of projective spaces")
        blocks = sorted(set(blocks))
        if not blocks or blocks[0] < 0 or blocks[-1] >= len(self.ns):
            raise InputError(f"invalid factor selection {blocks}")
        kept = [i for b in blocks for i in self.block_indices(b)]
        aliases = [self.variables[i].alias for i in kept]
        ring = product_of_projective_spaces([self.ns[b] for b in blocks],
                                            aliases if all(aliases) else None)
        return ring, kept

    def descriptor(self) -> dict:
        if self.family == PROJECTIVE:
            return {"family": PROJECTIVE, "n": self.params[0]}
        if self.family == PRODUCT:
            return {"family": PRODUCT, "ns": list(self.params)}
        return {"family": HIRZEBRUCH, "a": self.params[0]}

    def __str__(self) -> str:
        if self.family == HIRZEBRUCH:
            return f"Hirzebruch({self.params[0]})"
        return " x ".join(f"P^{n}" for n in self.params)


@functools.lru_cache(maxsize=4096)
def _monomials(ring: CoxRing, coords: Tuple[int, ...]) -> Tuple[Monomial, ...]:
    if ring.is_product:
        per_block = []
        for b, u in enumerate(coords):
            idx = ring.block_indices(b)
            choices = []
            for combo in itertools.combinations_with_replacement(idx, u):
                choices.append(combo)
            per_block.append(choices)
        result = []
        for picks in itertools.product(*per_block):
            exps = [0] * ring.nvars
            for combo in picks:
                for i in combo:
                    exps[i] += 1
            result.append(tuple(exps))
        return tuple(result)

    degrees = [v.degree.coords for v in ring.variables]
    result = []

    def extend(i, remaining, exps):
        if i == len(degrees):
            if not any(remaining):
                result.append(tuple(exps))
            return
        e = 0
        rest = remaining
        while all(c >= 0 for c in rest):
            extend(i + 1, rest, exps + [e])
            if not any(degrees[i]):
                break
            e += 1
            rest = tuple(c - g for c, g in zip(rest, degrees[i]))

    extend(0, tuple(coords), [])
    return tuple(result)


def greek_aliases(ns: Sequence[int]) -> List[str]:
    """Short names a0, a1, ..., b0, ... for the blocks of a product."""
    return [f"{_BLOCK_LETTERS[b]}{j}" for b, n in enumerate(ns) for j in range(n + 1)]


def product_of_projective_spaces(ns: Sequence[int], aliases: Optional[Sequence[str]] = None) -> CoxRing:
    ns = tuple(int(n) for n in ns)
    if not ns or any(n < 1 for n in ns):
        raise InputError(f"projective factor dimensions must be positive: {ns}")
    d = len(ns)
    variables = []
    k = 0
    for b, n in enumerate(ns):
        for j in range(n + 1):
            alias = aliases[k] if aliases else None
            variables.append(Variable(f"x{b}_{j}", b, MultiDegree.unit(d, b), alias))
            k += 1
    blocks = tuple(tuple(range(sum(n + 1 for n in ns[:b]), sum(n + 1 for n in ns[: b + 1]))) for b in range(d))
    return CoxRing(
        family=PROJECTIVE if d == 1 else PRODUCT,
        params=ns,
        variables=tuple(variables),
        pic_rank=d,
        dim=sum(ns),
        nef_generators=tuple(MultiDegree.unit(d, b) for b in range(d)),
        irrelevant_blocks=blocks,
    )


def projective_space(n: int, aliases: Optional[Sequence[str]] = None) -> CoxRing:
    return product_of_projective_spaces([n], aliases)


def hirzebruch(a: int, aliases: Optional[Sequence[str]] = ("a1", "a2", "a3", "a4")) -> CoxRing:
    """Cox ring of the Hirzebruch surface H_a in the basis (D_3, D_4) of Pic.

    Variables are alpha_1..alpha_4 of degrees (1,0), (a,1), (1,0), (0,1);
    B = (alpha_1, alpha_3)(alpha_2, alpha_4).
    """
    a = int(a)
    if a < 0:
        raise InputError(f"Hirzebruch parameter must be non-negative: {a}")
    spec = [("x0_0", 0, (1, 0)), ("x1_0", 1, (a, 1)), ("x0_1", 0, (1, 0)), ("x1_1", 1, (0, 1))]
    variables = tuple(
        Variable(name, block, MultiDegree(deg), aliases[i] if aliases else None)
        for i, (name, block, deg) in enumerate(spec)
    )
    return CoxRing(
        family=HIRZEBRUCH,
        params=(a,),
        variables=variables,
        pic_rank=2,
        dim=2,
        nef_generators=(MultiDegree((1, 0)), MultiDegree((a, 1))),
        irrelevant_blocks=((0, 2), (1, 3)),
    )


def ring_from_descriptor(data: dict, aliases: Optional[Sequence[str]] = None) -> CoxRing:
    """Build a ring from ``{"family": ..., "n"|"ns"|"a": ...}``."""
    try:
        family = data["family"]
        if family == PROJECTIVE:
            return projective_space(int(data["n"]), aliases or data.get("aliases"))
        if family == PRODUCT:
            return product_of_projective_spaces(data["ns"], aliases or data.get("aliases"))
        if family == HIRZEBRUCH:
            return hirzebruch(int(data["a"]), aliases or data.get("aliases") or ("a1", "a2", "a3", "a4"))
    except InputError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed ring descriptor {data!r}") from exc
    raise InputError(f"unknown ring family {data.get('family')!r}")
