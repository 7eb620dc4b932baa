"""The modified CFLS coloring on beta^2-bit strings.

A vertex is a string of beta*beta bits read as beta blocks of beta bits. The
base color of an edge records the first block where the endpoints differ
(with the unordered pair of blocks seen there) and, for every block, the
1-indexed position of the first differing bit (0 when the blocks agree). The
sign vector compares the two endpoints block by block, evaluated on the pair
ordered by integer value.

Block and bit indices are 1-based; bit 1 of a block is its most significant
bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True)
class BitVertex:
    bits: str
    beta: int

    def __post_init__(self):
        if self.beta < 1:
            raise ValueError(f"beta must be positive, got {self.beta}")
        if len(self.bits) != self.beta * self.beta:
            raise ValueError(
                f"expected {self.beta * self.beta} bits for beta={self.beta}, "
                f"got {len(self.bits)}"
            )
        if set(self.bits) - {"0", "1"}:
            raise ValueError(f"not a bit string: {self.bits!r}")

    @classmethod
    def from_int(cls, value: int, beta: int) -> "BitVertex":
        return cls(format(value, f"0{beta * beta}b"), beta)

    @property
    def value(self) -> int:
        return int(self.bits, 2)

    def blocks(self) -> tuple[str, ...]:
        b = self.beta
        return tuple(self.bits[k * b:(k + 1) * b] for k in range(b))

    def __lt__(self, other: "BitVertex") -> bool:
        return self.value < other.value

    def __str__(self) -> str:
        return "|".join(self.blocks())


class CflsBaseColor(NamedTuple):
    head_index: int
    head_pair: tuple[str, str]  # the unordered block pair, stored sorted
    diffs: tuple[int, ...]


class CflsColor(NamedTuple):
    base: CflsBaseColor
    signs: tuple[int, ...]

    def render(self) -> str:
        b = self.base
        diffs = ",".join(map(str, b.diffs))
        signs = "".join("+" if s > 0 else "-" for s in self.signs)
        return f"({b.head_index},{b.head_pair[0]},{b.head_pair[1]};{diffs};{signs})"


def all_vertices(beta: int) -> list[BitVertex]:
    return [BitVertex.from_int(v, beta) for v in range(1 << (beta * beta))]


def block(v: BitVertex, k: int) -> str:
    if not 1 <= k <= v.beta:
        raise IndexError(f"block index {k} out of range 1..{v.beta}")
    return v.bits[(k - 1) * v.beta:k * v.beta]


def _first_diff(u: str, w: str) -> int:
    for pos, (a, b) in enumerate(zip(u, w), start=1):
        if a != b:
            return pos
    return 0


def _check_pair(x: BitVertex, y: BitVertex) -> None:
    if x.beta != y.beta:
        raise ValueError(f"block sizes differ: {x.beta} vs {y.beta}")
    if x.bits == y.bits:
        raise ValueError("an edge needs two distinct vertices")


def phi1(x: BitVertex, y: BitVertex) -> CflsBaseColor:
    _check_pair(x, y)
    xb, yb = x.blocks(), y.blocks()
    diffs = tuple(_first_diff(u, w) for u, w in zip(xb, yb))
    i = next(k for k, d in enumerate(diffs, start=1) if d)
    pair = tuple(sorted((xb[i - 1], yb[i - 1])))
    return CflsBaseColor(i, pair, diffs)


def phi2(x: BitVertex, y: BitVertex) -> tuple[int, ...]:
    _check_pair(x, y)
    lo, hi = (x, y) if x.value < y.value else (y, x)
    return tuple(
        -1 if int(a, 2) > int(b, 2) else 1 for a, b in zip(lo.blocks(), hi.blocks())
    )


def phi(x: BitVertex, y: BitVertex) -> CflsColor:
    return CflsColor(phi1(x, y), phi2(x, y))


def color_bound(beta: int) -> int:
    """Upper bound on the number of colors phi uses: beta^(beta+1) * 2^(3 beta)."""
    return beta ** (beta + 1) * 2 ** (3 * beta)
