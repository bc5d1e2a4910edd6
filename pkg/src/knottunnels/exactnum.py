"""Exact integer arithmetic: fractions, Q/Z slopes, 2x2 matrices, continued fractions.

Everything here works on Python ints, so nothing overflows no matter how long
a U/L word or a counting product gets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "Fraction", "SimpleSlope", "Mat2", "U", "L", "IDENTITY",
    "reduce", "simple_slope", "cf_expand", "cf_value", "mat_mul",
    "permanent", "fibonacci",
]


def reduce(num: int, den: int) -> Fraction:
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return Fraction(num, den)


@dataclass(frozen=True)
class SimpleSlope:
    """An element of Q/Z, stored as its representative in [0, 1)."""

    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator < 1 or not 0 <= self.numerator < self.denominator:
            raise ValueError(f"not a canonical Q/Z representative: {self.numerator}/{self.denominator}")
        if gcd(self.numerator, self.denominator) != 1:
            raise ValueError("representative is not reduced")

    def __neg__(self) -> SimpleSlope:
        return simple_slope(-self.numerator, self.denominator)

    def __str__(self) -> str:
        return f"[ {self.numerator}/{self.denominator} ]"


def simple_slope(num: int, den: int) -> SimpleSlope:
    f = reduce(num, den)
    return SimpleSlope(f.numerator % f.denominator, f.denominator)


def cf_expand(p: int, q: int) -> tuple[int, ...]:
    """Continued fraction terms [n_1, ..., n_k] of p/q, with n_k != 1 when k > 1.

    >>> cf_expand(41, 29)
    (1, 2, 2, 2, 2)
    """
    if not p > q >= 1:
        raise ValueError(f"need p > q >= 1, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} are not coprime")
    terms = []
    while q:
        a, r = divmod(p, q)
        terms.append(a)
        p, q = q, r
    if len(terms) > 1 and terms[-1] == 1:
        terms[-2] += 1
        terms.pop()
    return tuple(terms)


def cf_value(terms) -> Fraction:
    """Evaluate [n_1, ..., n_k] exactly."""
    terms = list(terms)
    if not terms:
        raise ValueError("empty continued fraction")
    value = Fraction(terms[-1])
    for t in reversed(terms[:-1]):
        value = t + 1 / value
    return value


@dataclass(frozen=True)
class Mat2:
    """Integer 2x2 matrix [[a, b], [c, d]]."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows) -> Mat2:
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        x, y = v
        return self.a * x + self.b * y, self.c * x + self.d * y

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def permanent(self) -> int:
        return self.a * self.d + self.b * self.c

    @property
    def row_sum(self) -> tuple[int, int]:
        return self.a + self.c, self.b + self.d

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"[ [ {self.a}, {self.b} ], [ {self.c}, {self.d} ] ]"


IDENTITY = Mat2(1, 0, 0, 1)
U = Mat2(1, 1, 0, 1)
L = Mat2(1, 0, 1, 1)


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return A @ B


def permanent(M: Mat2) -> int:
    return M.permanent


def fibonacci(n: int) -> int:
    """F_n with F_1 = F_2 = 1."""
    if n < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {n}")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a
