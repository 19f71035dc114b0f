"""
Upward-closed sets of degrees and the finite or difference regions built from them.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Tuple

from ..algebra.degrees import DegreeBox, DegreeLike, MultiDegree
from ..algebra.rings import CoxRing
from ..errors import DegreeMismatchError, InputError


def _minimal(degrees: Iterable[MultiDegree]) -> Tuple[MultiDegree, ...]:
    unique = sorted(set(degrees), key=lambda d: (d.total(), d.coords))
    kept = []
    for d in unique:
        if not any(k <= d for k in kept):
            kept.append(d)
    return tuple(sorted(kept, key=lambda d: d.coords))


@dataclass(frozen=True)
class DegreeSet:
    """{D : g <= D for some generator g}, with an antichain of generators."""

    p: int
    generators: Tuple[MultiDegree, ...] = ()

    def __post_init__(self):
        gens = [MultiDegree.of(g) for g in self.generators]
        for g in gens:
            if len(g) != self.p:
                raise DegreeMismatchError(f"degree {g} does not have length {self.p}")
        object.__setattr__(self, "generators", _minimal(gens))

    @classmethod
    def of(cls, p: int, generators: Iterable[DegreeLike]) -> "DegreeSet":
        return cls(p, tuple(MultiDegree.of(g) for g in generators))

    @classmethod
    def everything(cls, p: int) -> "DegreeSet":
        return cls(p, (MultiDegree.zero(p),))

    @classmethod
    def empty(cls, p: int) -> "DegreeSet":
        return cls(p, ())

    @classmethod
    def at_least(cls, p: int, i: int, k: int) -> "DegreeSet":
        """{u : u_i >= k}."""
        return cls(p, (MultiDegree.unit(p, i).scale(k),))

    def __contains__(self, degree: DegreeLike) -> bool:
        degree = MultiDegree.of(degree)
        return any(g <= degree for g in self.generators)

    def is_empty(self) -> bool:
        return not self.generators

    def is_everything(self) -> bool:
        return MultiDegree.zero(self.p) in self.generators

    def issubset(self, other: "DegreeSet") -> bool:
        return all(g in other for g in self.generators)

    def union(self, other: "DegreeSet") -> "DegreeSet":
        return DegreeSet(self.p, self.generators + other.generators)

    def to_json(self):
        return [g.to_list() for g in self.generators]


@dataclass(frozen=True)
class DegreeRegion:
    """The difference ``upper \\ lower`` of two upward-closed sets."""

    upper: DegreeSet
    lower: DegreeSet

    def __contains__(self, degree: DegreeLike) -> bool:
        return degree in self.upper and degree not in self.lower

    def to_json(self) -> dict:
        return {"B": self.upper.to_json(), "A": self.lower.to_json()}


@dataclass(frozen=True)
class FiniteDegreeSet:
    degrees: Tuple[MultiDegree, ...]

    @classmethod
    def of(cls, degrees: Iterable[DegreeLike]) -> "FiniteDegreeSet":
        return cls(tuple(MultiDegree.of(d) for d in degrees))

    def __contains__(self, degree: DegreeLike) -> bool:
        return MultiDegree.of(degree) in self.degrees

    def __iter__(self) -> Iterator[MultiDegree]:
        return iter(self.degrees)

    def to_json(self):
        return [d.to_list() for d in self.degrees]


def in_c(ring: CoxRing, r: int, degree: DegreeLike) -> bool:
    """Membership in C(r, X): effective degrees with dim S_D >= r."""
    return ring.is_effective(degree) and ring.dim_graded_piece(degree) >= r


def c_degrees(ring: CoxRing, r: int, box: DegreeBox) -> Iterator[MultiDegree]:
    return (d for d in box if in_c(ring, r, d))


def parse_degree_set(p: int, spec: Sequence) -> DegreeSet:
    """A DegreeSet from a list of generator degrees (JSON form)."""
    try:
        return DegreeSet.of(p, [list(g) if not isinstance(g, int) else [g] for g in spec])
    except TypeError as exc:
        raise InputError(f"malformed degree set {spec!r}") from exc
