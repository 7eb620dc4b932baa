"""The modified algebraic coloring on F_q^2.

``chi1(x, y) = (x1*y1 - x2 - y2, [x1 != y1])``. The modification ``chi2``
labels each endpoint's first coordinate S or T relative to the other one,
using a fixed bipartition of the perfect matching {b, 2a - b} on F_q minus a.
When the first coordinates coincide both labels are the sentinel E.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .field import FieldElement, FieldSpec, ff_rank


class StLabel(str, Enum):
    S = "S"
    T = "T"
    E = "E"

    def __str__(self) -> str:
        return self.value


class Vector2(NamedTuple):
    x1: FieldElement
    x2: FieldElement

    @classmethod
    def of(cls, field: FieldSpec, x1: int, x2: int) -> "Vector2":
        return cls(field(x1), field(x2))

    def sort_key(self) -> tuple[int, int]:
        return ff_rank(self.x1), ff_rank(self.x2)

    def __str__(self) -> str:
        return f"({self.x1.value},{self.x2.value})"


class AlgBaseColor(NamedTuple):
    value: int
    eq_flag: int


class AlgColor(NamedTuple):
    base: AlgBaseColor
    labels: tuple[StLabel, StLabel]

    def render(self) -> str:
        return f"({self.base.value},{self.base.eq_flag};{self.labels[0]}{self.labels[1]})"


def all_vectors(field: FieldSpec) -> list[Vector2]:
    """Every vector of F_q^2 in lexicographic rank order."""
    return [Vector2(a, b) for a in field for b in field]


def _check_pair(x: Vector2, y: Vector2) -> None:
    if x.x1.field != y.x1.field:
        raise ValueError("vectors over different fields")
    if x == y:
        raise ValueError("an edge needs two distinct vectors")


def chi1(x: Vector2, y: Vector2) -> AlgBaseColor:
    _check_pair(x, y)
    v = x.x1 * y.x1 - x.x2 - y.x2
    return AlgBaseColor(v.value, int(x.x1 != y.x1))


@lru_cache(maxsize=None)
def _partition_table(q: int) -> tuple[tuple[frozenset[int], frozenset[int]], ...]:
    # S gets the lower-rank element of every matched pair {b, 2a - b}
    table = []
    for a in range(q):
        s, t = set(), set()
        for b in range(q):
            if b == a:
                continue
            partner = (2 * a - b) % q
            (s if b < partner else t).add(b)
        table.append((frozenset(s), frozenset(t)))
    return tuple(table)


def st_partition(alpha: FieldElement) -> tuple[frozenset[FieldElement], frozenset[FieldElement]]:
    f = alpha.field
    s, t = _partition_table(f.q)[alpha.value]
    return frozenset(f(v) for v in s), frozenset(f(v) for v in t)


def f_alpha(alpha: FieldElement, beta: FieldElement) -> StLabel:
    if alpha.field != beta.field:
        raise ValueError("elements of different fields")
    if alpha == beta:
        return StLabel.E
    s, _ = _partition_table(alpha.field.q)[alpha.value]
    return StLabel.S if beta.value in s else StLabel.T


def chi2(x: Vector2, y: Vector2) -> tuple[StLabel, StLabel]:
    _check_pair(x, y)
    lo, hi = (x, y) if x.sort_key() < y.sort_key() else (y, x)
    return f_alpha(lo.x1, hi.x1), f_alpha(hi.x1, lo.x1)


def chi(x: Vector2, y: Vector2) -> AlgColor:
    return AlgColor(chi1(x, y), chi2(x, y))


def color_bound(q: int) -> int:
    """At most 2q base colors times four label pairs."""
    return 8 * q
