"""Lattice points of N_0^d, orders on them, and finite gap sets.

A generalized numerical semigroup S is stored only through its gap set
H(S) = N_0^d \\ S.  Points are plain tuples of non-negative ints.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Point = tuple[int, ...]


class GNSError(Exception):
    """Base class for errors raised by this package."""


class DimensionError(GNSError):
    pass


class InvalidGapSet(GNSError):
    """The complement of the gap set is not closed under addition.

    ``witness`` holds ``(h, x, y)`` with ``h = x + y`` a gap while ``x``
    and ``y`` are both non-gaps, when such a decomposition exists.
    """

    def __init__(self, message: str, witness: tuple[Point, Point, Point] | None = None):
        super().__init__(message)
        self.witness = witness


class DomainError(GNSError):
    pass


# -- points ----------------------------------------------------------------

def as_point(coords: Iterable[int]) -> Point:
    p = tuple(int(c) for c in coords)
    if not p:
        raise DimensionError("points need at least one coordinate")
    if any(c < 0 for c in p):
        raise ValueError(f"negative coordinate in {p}")
    return p


def _check_dims(x: Sequence[int], y: Sequence[int]) -> None:
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")


def zero(d: int) -> Point:
    return (0,) * d


def ones(d: int) -> Point:
    return (1,) * d


def add(x: Point, y: Point) -> Point:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Point, y: Point) -> tuple[int, ...]:
    """Coordinatewise difference; may leave N_0^d (negative coordinates)."""
    return tuple(a - b for a, b in zip(x, y))


def scale(k: int, x: Point) -> Point:
    return tuple(k * a for a in x)


def is_natural(x: Sequence[int]) -> bool:
    return all(a >= 0 for a in x)


def partial_leq(x: Point, y: Point) -> bool:
    """Natural partial order: x <= y iff x_i <= y_i for every i."""
    _check_dims(x, y)
    return all(a <= b for a, b in zip(x, y))


def partial_less(x: Point, y: Point) -> bool:
    return x != y and partial_leq(x, y)


def lub(points: Iterable[Point]) -> Point:
    """Coordinatewise maximum of a non-empty finite set of points."""
    pts = list(points)
    if not pts:
        raise ValueError("lub of an empty set is undefined")
    d = len(pts[0])
    for p in pts:
        _check_dims(pts[0], p)
    return tuple(max(p[i] for p in pts) for i in range(d))


def maximals(points: Iterable[Point]) -> list[Point]:
    """Maximal elements under the natural partial order, lex sorted."""
    pts = sorted(set(points))
    return [p for p in pts if not any(q != p and partial_leq(p, q) for q in pts)]


def box(top: Point, include_zero: bool = False) -> Iterator[Point]:
    """All points x with 0 <= x <= top, in lexicographic order."""
    for p in itertools.product(*(range(t + 1) for t in top)):
        if include_zero or any(p):
            yield p


def strictly_between(h: Point) -> Iterator[Point]:
    """Points x with 0 < x < h (both strict in the partial order)."""
    for x in box(h):
        if x != h:
            yield x


# -- monomial orders -------------------------------------------------------

class MonomialOrder(enum.Enum):
    LEX = "lex"
    GRLEX = "grlex"

    def key(self, x: Point):
        if self is MonomialOrder.LEX:
            return x
        return (sum(x), x)

    @classmethod
    def parse(cls, name: "str | MonomialOrder") -> "MonomialOrder":
        if isinstance(name, MonomialOrder):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown monomial order {name!r} (use lex or grlex)") from None


def monomial_less(order: MonomialOrder | str, x: Point, y: Point) -> bool:
    _check_dims(x, y)
    order = MonomialOrder.parse(order)
    return order.key(x) < order.key(y)


# -- gap sets --------------------------------------------------------------

@dataclass(frozen=True)
class GapSet:
    """Finite gap set of a candidate GNS in N_0^d.

    Construction only checks the shape of the data (dimension, non-negative,
    no zero vector); use :func:`validate_gapset` for the closure condition.
    """

    d: int
    gaps: frozenset

    def __init__(self, d: int, gaps: Iterable[Iterable[int]] = ()):
        if d < 1:
            raise DimensionError("dimension must be at least 1")
        pts = frozenset(as_point(g) for g in gaps)
        for p in pts:
            if len(p) != d:
                raise DimensionError(f"point {p} is not in dimension {d}")
        if zero(d) in pts:
            raise ValueError("the zero vector cannot be a gap")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "gaps", pts)

    @classmethod
    def of(cls, gaps: Iterable[Iterable[int]], d: int | None = None) -> "GapSet":
        pts = [tuple(g) for g in gaps]
        if d is None:
            if not pts:
                raise DimensionError("cannot infer dimension of an empty gap set")
            d = len(pts[0])
        return cls(d, pts)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    def __len__(self) -> int:
        return len(self.gaps)

    def __contains__(self, x) -> bool:
        return tuple(x) in self.gaps

    def __iter__(self) -> Iterator[Point]:
        return iter(self.sorted())

    def sorted(self) -> list[Point]:
        return sorted(self.gaps)

    def in_semigroup(self, x: Sequence[int]) -> bool:
        """Membership in S; points with a negative coordinate are not in S."""
        return is_natural(x) and tuple(x) not in self.gaps

    def without(self, *points: Point) -> "GapSet":
        return GapSet(self.d, self.gaps.difference(points))

    def sort_key(self):
        return (self.d, tuple(self.sorted()))

    def __lt__(self, other: "GapSet") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"GapSet(d={self.d}, gaps={self.sorted()})"

    # serialization
    def to_dict(self) -> dict:
        return {"d": self.d, "gaps": [list(g) for g in self.sorted()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "GapSet":
        try:
            d = int(doc["d"])
            raw = doc["gaps"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed gap-set document: {exc}") from None
        pts = [tuple(int(c) for c in g) for g in raw]
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate gap in document")
        return cls(d, pts)

    @classmethod
    def from_json(cls, text: str) -> "GapSet":
        return cls.from_dict(json.loads(text))


def closure_violation(H: GapSet) -> tuple[Point, Point, Point] | None:
    """Return ``(h, x, h - x)`` with both parts non-gaps, or None if closed."""
    for h in H.sorted():
        for x in strictly_between(h):
            y = sub(h, x)
            if x not in H.gaps and y not in H.gaps:
                return h, x, y
    return None


def validate_gapset(H: GapSet) -> bool:
    return closure_violation(H) is None


def require_valid(H: GapSet) -> None:
    bad = closure_violation(H)
    if bad is not None:
        h, x, y = bad
        raise InvalidGapSet(f"{h} = {x} + {y} with {x} and {y} both outside the gap set", bad)


def _inline(x) -> bool:
    # Points, and lists of points, stay on one line.
    if not isinstance(x, list):
        return not isinstance(x, dict)
    return all(not isinstance(v, (list, dict)) for v in x) or all(
        isinstance(v, list) and all(not isinstance(w, (list, dict)) for w in v) for v in x
    )


def dumps(doc) -> str:
    """Deterministic indented JSON, with points kept on one line."""

    def render(x, depth: int) -> str:
        pad = "  " * (depth + 1)
        if isinstance(x, dict) and x:
            items = [f"{pad}{json.dumps(k)}: {render(v, depth + 1)}" for k, v in x.items()]
            return "{\n" + ",\n".join(items) + "\n" + "  " * depth + "}"
        if isinstance(x, list) and not _inline(x):
            items = [pad + render(v, depth + 1) for v in x]
            return "[\n" + ",\n".join(items) + "\n" + "  " * depth + "]"
        return json.dumps(x)

    return render(doc, 0) + "\n"
