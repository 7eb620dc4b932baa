"""Prime field arithmetic for F_q, q an odd prime.

Elements are immutable residues tagged with their field. The field carries a
linear order; for prime q it is the natural residue order, so ``rank`` is the
identity on residues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

MAX_MODULUS = 1 << 16


class FieldError(ValueError):
    """Invalid modulus or arithmetic across different fields."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or isinstance(self.q, bool):
            raise FieldError(f"modulus must be an int, got {self.q!r}")
        if self.q >= MAX_MODULUS:
            raise FieldError(f"modulus {self.q} outside supported range [3, 2^16)")
        if self.q < 3 or self.q % 2 == 0 or not is_prime(self.q):
            raise FieldError(f"modulus must be an odd prime, got {self.q}")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.q, self)

    def __iter__(self) -> Iterator["FieldElement"]:
        return (FieldElement(v, self) for v in range(self.q))

    def __len__(self) -> int:
        return self.q

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)


@dataclass(frozen=True, order=False)
class FieldElement:
    value: int
    field: FieldSpec

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldError(f"{self.value} is not a residue mod {self.field.q}")

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldError(
                f"mismatched fields: F_{self.field.q} and F_{other.field.q}"
            )

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return ff_addsub(self, other, "+")

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return ff_addsub(self, other, "-")

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return ff_mul(self, other)

    def __neg__(self) -> "FieldElement":
        return FieldElement((-self.value) % self.field.q, self.field)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.q})"


def ff_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    a._check(b)
    return FieldElement((a.value * b.value) % a.field.q, a.field)


def ff_addsub(a: FieldElement, b: FieldElement, sign: str = "+") -> FieldElement:
    a._check(b)
    if sign == "+":
        v = a.value + b.value
    elif sign == "-":
        v = a.value - b.value
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return FieldElement(v % a.field.q, a.field)


def ff_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return ff_addsub(a, b, "+")


def ff_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return ff_addsub(a, b, "-")


def ff_inverse(a: FieldElement) -> FieldElement:
    """Multiplicative inverse via the extended Euclidean algorithm."""
    if a.value == 0:
        raise ZeroDivisionError("zero has no inverse")
    r0, r1 = a.field.q, a.value
    s0, s1 = 0, 1
    while r1:
        t = r0 // r1
        r0, r1 = r1, r0 - t * r1
        s0, s1 = s1, s0 - t * s1
    return FieldElement(s0 % a.field.q, a.field)


def ff_rank(a: FieldElement) -> int:
    """Position of ``a`` in the field's linear order (natural residue order)."""
    return a.value
