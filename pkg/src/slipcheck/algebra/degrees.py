"""
Multidegrees (elements of Pic(X) in a fixed basis) and finite boxes of them.
"""
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

from ..errors import DegreeMismatchError, InputError

DegreeLike = Union["MultiDegree", Sequence[int], int]


@dataclass(frozen=True)
class MultiDegree:
    """An integer vector of length p = Pic rank.

    ``<=`` is the componentwise partial order; use ``.coords`` for a total
    (lexicographic) sort key.
    """

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def of(cls, value: DegreeLike) -> "MultiDegree":
        if isinstance(value, MultiDegree):
            return value
        if isinstance(value, int):
            return cls((value,))
        try:
            return cls(tuple(value))
        except (TypeError, ValueError) as exc:
            raise InputError(f"not a multidegree: {value!r}") from exc

    @classmethod
    def zero(cls, p: int) -> "MultiDegree":
        return cls((0,) * p)

    @classmethod
    def unit(cls, p: int, i: int) -> "MultiDegree":
        return cls(tuple(1 if j == i else 0 for j in range(p)))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def _check(self, other: "MultiDegree") -> "MultiDegree":
        other = MultiDegree.of(other)
        if len(other) != len(self):
            raise DegreeMismatchError(f"degrees {self.coords} and {other.coords} have different lengths")
        return other

    def __add__(self, other: DegreeLike) -> "MultiDegree":
        other = self._check(other)
        return MultiDegree(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: DegreeLike) -> "MultiDegree":
        other = self._check(other)
        return MultiDegree(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "MultiDegree":
        return MultiDegree(tuple(-a for a in self.coords))

    def scale(self, k: int) -> "MultiDegree":
        return MultiDegree(tuple(k * a for a in self.coords))

    def __le__(self, other: DegreeLike) -> bool:
        other = self._check(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def __ge__(self, other: DegreeLike) -> bool:
        other = self._check(other)
        return all(a >= b for a, b in zip(self.coords, other.coords))

    def __lt__(self, other: DegreeLike) -> bool:
        return self <= other and self != MultiDegree.of(other)

    def __gt__(self, other: DegreeLike) -> bool:
        return self >= other and self != MultiDegree.of(other)

    def join(self, other: DegreeLike) -> "MultiDegree":
        """Componentwise maximum."""
        other = self._check(other)
        return MultiDegree(tuple(max(a, b) for a, b in zip(self.coords, other.coords)))

    def meet(self, other: DegreeLike) -> "MultiDegree":
        other = self._check(other)
        return MultiDegree(tuple(min(a, b) for a, b in zip(self.coords, other.coords)))

    def is_nonnegative(self) -> bool:
        return all(a >= 0 for a in self.coords)

    def total(self) -> int:
        return sum(self.coords)

    def to_list(self) -> list:
        return list(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


def join_all(degrees: Iterable[MultiDegree], p: int) -> MultiDegree:
    result = MultiDegree.zero(p)
    for d in degrees:
        result = result.join(d)
    return result


@dataclass(frozen=True)
class DegreeBox:
    """All degrees D with lower <= D <= upper, iterated lexicographically."""

    lower: MultiDegree
    upper: MultiDegree

    def __post_init__(self):
        lower = MultiDegree.of(self.lower)
        upper = MultiDegree.of(self.upper)
        if len(lower) != len(upper):
            raise DegreeMismatchError("box corners have different lengths")
        if not lower <= upper:
            raise InputError(f"box lower corner {lower} is not below upper corner {upper}")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def up_to(cls, upper: DegreeLike) -> "DegreeBox":
        upper = MultiDegree.of(upper)
        return cls(MultiDegree.zero(len(upper)), upper)

    def __iter__(self) -> Iterator[MultiDegree]:
        ranges = [range(lo, hi + 1) for lo, hi in zip(self.lower, self.upper)]
        for coords in itertools.product(*ranges):
            yield MultiDegree(coords)

    def __len__(self) -> int:
        n = 1
        for lo, hi in zip(self.lower, self.upper):
            n *= hi - lo + 1
        return n

    def __contains__(self, degree: DegreeLike) -> bool:
        degree = MultiDegree.of(degree)
        return self.lower <= degree <= self.upper

    def to_json(self) -> dict:
        return {"lower": self.lower.to_list(), "upper": self.upper.to_list()}
