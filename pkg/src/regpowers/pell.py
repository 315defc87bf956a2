"""Continued fractions of sqrt(d) and the negative Pell equation s^2 - d*r^2 = -1.

Solvability is decided by the parity of the continued-fraction period, so
unsolvable radicands terminate quickly; enumeration composes the
fundamental solution with the square of the fundamental unit, which costs
one big-integer multiply per emitted solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .quadratic import QuadraticNumber, check_radicand, isqrt


class NegativePellUnsolvableError(ValueError):
    """Raised when solutions of s^2 - d*r^2 = -1 are requested but none exist."""


@dataclass(frozen=True)
class CFExpansion:
    """Periodic continued fraction of sqrt(d): a0 followed by a repeating block.

    For square roots the period is never empty and always ends in 2*a0;
    both structural facts are enforced at construction.
    """

    a0: int
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.a0 < 1:
            raise ValueError(f"integer part must be >= 1, got {self.a0}")
        if not self.period or self.period[-1] != 2 * self.a0:
            raise ValueError(f"period must be nonempty and end in {2 * self.a0}")

    def partial_quotient(self, n: int) -> int:
        """n-th partial quotient a_n (a_0 = a0, then the period repeats)."""
        if n < 0:
            raise ValueError("partial quotient index must be >= 0")
        if n == 0:
            return self.a0
        return self.period[(n - 1) % len(self.period)]

    def __str__(self) -> str:
        return f"[{self.a0}; {', '.join(str(a) for a in self.period)}]"


@dataclass(frozen=True)
class PellSolution:
    """Positive integers (s, r) with s^2 - d*r^2 = -1; checked on construction."""

    s: int
    r: int
    d: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.r < 1:
            raise ValueError(f"solution components must be positive: ({self.s}, {self.r})")
        if self.s * self.s - self.d * self.r * self.r != -1:
            raise ValueError(f"({self.s}, {self.r}) does not solve s^2 - {self.d}*r^2 = -1")


def cf_expand_sqrt(d: int) -> CFExpansion:
    """Continued fraction of sqrt(d) by the surd recursion on (P, Q) states.

    State (P, Q) stands for (P + sqrt(d))/Q; starting from (0, 1) the
    quotient sequence becomes periodic as soon as the state repeats.
    """
    check_radicand(d)
    a0 = isqrt(d)
    period: list[int] = []
    p, q = a0, d - a0 * a0  # state after extracting a0
    first = (p, q)
    while True:
        a = (a0 + p) // q
        period.append(a)
        p = a * q - p
        q = (d - p * p) // q
        if (p, q) == first:
            return CFExpansion(a0, tuple(period))


def convergents(d: int, count: int) -> list[tuple[int, int]]:
    """First `count` convergents p_n/q_n of sqrt(d).

    Standard recurrence p_n = a_n*p_{n-1} + p_{n-2}, q_n = a_n*q_{n-1} + q_{n-2}
    seeded with (p, q)_{-1} = (1, 0) and (p, q)_{-2} = (0, 1).
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    cf = cf_expand_sqrt(d)
    out: list[tuple[int, int]] = []
    p_prev, p_prev2 = 1, 0
    q_prev, q_prev2 = 0, 1
    for n in range(count):
        a = cf.partial_quotient(n)
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        out.append((p, q))
        p_prev2, p_prev = p_prev, p
        q_prev2, q_prev = q_prev, q
    return out


def negative_pell_solvable(d: int) -> bool:
    """True iff s^2 - d*r^2 = -1 has integer solutions (odd period length)."""
    return len(cf_expand_sqrt(d).period) % 2 == 1


def iter_negative_pell_solutions(d: int) -> Iterator[PellSolution]:
    """Yield all positive solutions of s^2 - d*r^2 = -1 in increasing r order.

    The fundamental solution is the convergent just before the end of the
    first period; every further solution is an odd power of it, produced by
    multiplying with the square of the fundamental element. Each emitted
    solution is re-verified by the PellSolution constructor.
    """
    cf = cf_expand_sqrt(d)
    if len(cf.period) % 2 == 0:
        raise NegativePellUnsolvableError(
            f"s^2 - {d}*r^2 = -1 has no integer solutions "
            f"(continued-fraction period of sqrt({d}) has even length)"
        )
    s0, r0 = convergents(d, len(cf.period))[-1]
    unit = QuadraticNumber(s0, r0, d)
    step = unit * unit  # norm +1, preserves solutions
    current = unit
    while True:
        yield PellSolution(current.p, current.q, d)
        current = current * step


def negative_pell_solutions(d: int, count: int) -> list[PellSolution]:
    """The `count` smallest positive solutions of s^2 - d*r^2 = -1."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    it = iter_negative_pell_solutions(d)
    return [next(it) for _ in range(count)]


def sqrt2_denominators(count: int) -> list[int]:
    """First `count` terms of q_0=1, q_1=2, q_m = 2*q_{m-1} + q_{m-2}.

    These are the denominators of the convergents of sqrt(2); the terms of
    even index are exactly the r components of the solutions of
    s^2 - 2*r^2 = -1.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    terms = [1, 2]
    while len(terms) < count:
        terms.append(2 * terms[-1] + terms[-2])
    return terms[:count]
