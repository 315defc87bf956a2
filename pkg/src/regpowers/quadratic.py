"""Exact arithmetic in Z[sqrt(d)] and integer square-root primitives.

Everything in this module is arbitrary-precision integer arithmetic; no
floating point is used anywhere. Sign determination for p + q*sqrt(d) is
exact and total because d is validated to be a non-square, which makes
sqrt(d) irrational and rules out ties in the comparisons below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def isqrt(n: int) -> int:
    """Integer square root: the unique s with s*s <= n < (s+1)*(s+1)."""
    if n < 0:
        raise ValueError("isqrt is undefined for negative integers")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    """True iff n is the square of an integer."""
    if n < 0:
        raise ValueError("is_perfect_square is undefined for negative integers")
    s = math.isqrt(n)
    return s * s == n


def check_radicand(d: int) -> None:
    """Reject radicands for which sqrt(d) is rational.

    Every operation in this package relies on sqrt(d) being irrational;
    square d would make sign determination silently wrong, so it is
    rejected at construction time rather than checked per operation.
    """
    if d < 2 or is_perfect_square(d):
        raise ValueError(f"radicand must be a non-square integer >= 2, got {d}")


def floor_mul_sqrt(r: int, d: int) -> int:
    """Floor of r*sqrt(d) for r >= 1 and non-square d, via isqrt(r^2 d)."""
    if r < 1:
        raise ValueError(f"multiplier must be >= 1, got {r}")
    check_radicand(d)
    return math.isqrt(r * r * d)


@dataclass(frozen=True)
class QuadraticNumber:
    """The real number p + q*sqrt(d), with integer p, q and non-square d >= 2.

    Values are immutable; arithmetic is only defined between numbers with
    the same radicand. Integer operands are lifted to the rational part.
    """

    p: int
    q: int
    d: int

    def __post_init__(self) -> None:
        check_radicand(self.d)

    def _coerce(self, other: QuadraticNumber | int) -> QuadraticNumber:
        if isinstance(other, int):
            return QuadraticNumber(other, 0, self.d)
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise ValueError(f"mismatched radicands: {self.d} vs {other.d}")
            return other
        raise TypeError(f"cannot combine QuadraticNumber with {type(other).__name__}")

    def __add__(self, other: QuadraticNumber | int) -> QuadraticNumber:
        other = self._coerce(other)
        return QuadraticNumber(self.p + other.p, self.q + other.q, self.d)

    __radd__ = __add__

    def __sub__(self, other: QuadraticNumber | int) -> QuadraticNumber:
        other = self._coerce(other)
        return QuadraticNumber(self.p - other.p, self.q - other.q, self.d)

    def __rsub__(self, other: QuadraticNumber | int) -> QuadraticNumber:
        return (-self) + other

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.p, -self.q, self.d)

    def __mul__(self, other: QuadraticNumber | int) -> QuadraticNumber:
        other = self._coerce(other)
        return QuadraticNumber(
            self.p * other.p + self.q * other.q * self.d,
            self.p * other.q + self.q * other.p,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        """p - q*sqrt(d)."""
        return QuadraticNumber(self.p, -self.q, self.d)

    def norm(self) -> int:
        """Field norm p^2 - d*q^2; multiplicative over products."""
        return self.p * self.p - self.d * self.q * self.q

    def sign(self) -> int:
        """Exact sign (-1, 0, +1) of the real number p + q*sqrt(d).

        When p and q have opposite signs the comparison reduces to p^2
        versus d*q^2; a tie there would force sqrt(d) rational, so it
        cannot occur for a validated radicand.
        """
        if self.q == 0:
            return (self.p > 0) - (self.p < 0)
        if self.p == 0 or (self.p > 0) == (self.q > 0):
            return 1 if self.q > 0 else -1
        rational_sq = self.p * self.p
        radical_sq = self.d * self.q * self.q
        assert rational_sq != radical_sq, "non-square radicand cannot tie"
        if self.p > 0:
            return 1 if rational_sq > radical_sq else -1
        return 1 if radical_sq > rational_sq else -1

    def __str__(self) -> str:
        return f"{self.p}{self.q:+d}*sqrt({self.d})"
