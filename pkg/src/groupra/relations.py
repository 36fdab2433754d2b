"""Concrete binary relations over a fixed base set 0..size-1.

This is the ground-truth side of the package: plain bit-matrix arithmetic,
deliberately independent of the coset/atom machinery so the two can check
each other.  Row a of a relation is the bitmask of all b with (a,b) in R.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .groups import FiniteGroup

__all__ = [
    "ConcreteRelation",
    "rel_compose",
    "rel_converse",
    "rel_union",
    "rel_intersect",
    "rel_complement_within",
    "identity_on",
    "cayley_relation",
]


@dataclass(frozen=True)
class ConcreteRelation:
    size: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.size:
            raise ValueError(f"expected {self.size} rows, got {len(self.rows)}")
        top = (1 << self.size) - 1
        if any(r & ~top for r in self.rows):
            raise ValueError("row mask reaches outside the base set")

    @classmethod
    def empty(cls, size: int) -> "ConcreteRelation":
        return cls(size, (0,) * size)

    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]]) -> "ConcreteRelation":
        rows = [0] * size
        for a, b in pairs:
            if not (0 <= a < size and 0 <= b < size):
                raise ValueError(f"pair ({a},{b}) outside base set 0..{size - 1}")
            rows[a] |= 1 << b
        return cls(size, tuple(rows))

    def pairs(self) -> list[tuple[int, int]]:
        """All (a, b) in the relation, lexicographically sorted."""
        out = []
        for a, row in enumerate(self.rows):
            b = 0
            while row:
                if row & 1:
                    out.append((a, b))
                row >>= 1
                b += 1
        return out

    def count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __contains__(self, pair: tuple[int, int]) -> bool:
        a, b = pair
        return 0 <= a < self.size and bool(self.rows[a] >> b & 1)

    def __repr__(self) -> str:
        return f"ConcreteRelation(size={self.size}, pairs={self.count()})"


def _same_size(r: ConcreteRelation, s: ConcreteRelation) -> int:
    if r.size != s.size:
        raise ValueError(f"base set sizes differ: {r.size} vs {s.size}")
    return r.size


def rel_compose(r: ConcreteRelation, s: ConcreteRelation) -> ConcreteRelation:
    """Relational composition r|s = {(a,c) : some b with aRb and bSc}."""
    n = _same_size(r, s)
    rows = []
    for row in r.rows:
        acc = 0
        b = 0
        while row:
            if row & 1:
                acc |= s.rows[b]
            row >>= 1
            b += 1
        rows.append(acc)
    return ConcreteRelation(n, tuple(rows))


def rel_converse(r: ConcreteRelation) -> ConcreteRelation:
    rows = [0] * r.size
    for a, row in enumerate(r.rows):
        bit = 1 << a
        b = 0
        while row:
            if row & 1:
                rows[b] |= bit
            row >>= 1
            b += 1
    return ConcreteRelation(r.size, tuple(rows))


def rel_union(r: ConcreteRelation, s: ConcreteRelation) -> ConcreteRelation:
    n = _same_size(r, s)
    return ConcreteRelation(n, tuple(a | b for a, b in zip(r.rows, s.rows)))


def rel_intersect(r: ConcreteRelation, s: ConcreteRelation) -> ConcreteRelation:
    n = _same_size(r, s)
    return ConcreteRelation(n, tuple(a & b for a, b in zip(r.rows, s.rows)))


def rel_complement_within(r: ConcreteRelation, e: ConcreteRelation) -> ConcreteRelation:
    """Complement of r relative to a unit relation e (r must sit inside e)."""
    n = _same_size(r, e)
    if any(a & ~b for a, b in zip(r.rows, e.rows)):
        raise ValueError("relation is not contained in the given unit")
    return ConcreteRelation(n, tuple(b & ~a for a, b in zip(r.rows, e.rows)))


def identity_on(size: int) -> ConcreteRelation:
    return ConcreteRelation(size, tuple(1 << a for a in range(size)))


def cayley_relation(
    g: FiniteGroup,
    x: int,
    offset: int = 0,
    size: int | None = None,
) -> ConcreteRelation:
    """The Cayley relation of x: all pairs (a, a*x), embedded at an offset.

    With the default offset this is the right-translation bijection on the
    group's own elements.
    """
    if size is None:
        size = offset + g.order
    return ConcreteRelation.from_pairs(
        size, ((offset + a, offset + g.mul(a, x)) for a in g.elements())
    )
