"""Validated curve-class parameters (a, b, c) and exact root comparisons.

A parameter triple selects the ample class C = (a, b, c) on the quartic
surface. The pencil m*H - r*C crosses the null cone of the intersection
form at the two irrational roots

    lambda1 = a - sqrt(d),   lambda2 = a + sqrt(d),   d = b^2 + c^2,

and every downstream comparison against them is carried out exactly with
QuadraticNumber signs. Two validation levels exist: LATTICE_ONLY admits any
triple whose class is ample with irrational roots, while STRICT additionally
demands lambda1 > 7 and lambda2 - lambda1 > 2, the regime in which the
regularity formula and the blowup vanishing statements are established.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .lattice import DivisorClass
from .quadratic import QuadraticNumber, is_perfect_square, isqrt


class Strictness(enum.Enum):
    STRICT = "strict"
    LATTICE_ONLY = "lattice-only"


class ParameterError(ValueError):
    """Rejection of a parameter triple, naming every violated constraint."""

    def __init__(self, violations: list[tuple[str, str]]):
        self.violations = [code for code, _ in violations]
        super().__init__("; ".join(message for _, message in violations))


def _violations(a: int, b: int, c: int, strictness: Strictness) -> list[tuple[str, str]]:
    found = []
    d = b * b + c * c
    if a <= 0:
        found.append(("a_nonpositive", f"a must be positive, got {a}"))
    if a * a - d <= 0:
        found.append(
            ("class_not_interior", f"a^2 - b^2 - c^2 must be positive, got {a * a - d}")
        )
    if is_perfect_square(d):
        found.append(
            ("d_perfect_square", f"d = b^2 + c^2 = {d} is a perfect square, sqrt(d) rational")
        )
    if strictness is Strictness.STRICT:
        if a <= 7 or (a - 7) ** 2 <= d:
            found.append(
                ("lambda1_not_above_7", f"lambda1 = {a} - sqrt({d}) must exceed 7")
            )
        if d <= 1:
            found.append(
                ("root_gap_too_small", f"lambda2 - lambda1 = 2*sqrt({d}) must exceed 2")
            )
    return found


@dataclass(frozen=True)
class SurfaceParams:
    """A validated triple (a, b, c) with derived radicand d = b^2 + c^2.

    Construction raises ParameterError listing all violated constraints, so
    invalid parameters can never reach the arithmetic below.
    """

    a: int
    b: int
    c: int
    strictness: Strictness = Strictness.STRICT
    d: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", self.b * self.b + self.c * self.c)
        found = _violations(self.a, self.b, self.c, self.strictness)
        if found:
            raise ParameterError(found)

    @property
    def is_strict(self) -> bool:
        return self.strictness is Strictness.STRICT

    def curve_class(self) -> DivisorClass:
        return DivisorClass(self.a, self.b, self.c)


def validate_params(
    a: int, b: int, c: int, strictness: Strictness = Strictness.STRICT
) -> SurfaceParams:
    """Validate (a, b, c) or raise ParameterError naming every violation."""
    return SurfaceParams(a, b, c, strictness)


def require_strict(params: SurfaceParams, operation: str) -> None:
    """Gate operations whose formulas are only established in the strict regime."""
    if not params.is_strict:
        raise ParameterError(
            [(
                "strict_params_required",
                f"{operation} requires strictly validated parameters; "
                "re-validate without lattice-only relaxation",
            )]
        )


def lambda_bounds(params: SurfaceParams) -> tuple[QuadraticNumber, QuadraticNumber]:
    """The exact pencil roots (lambda1, lambda2) = (a - sqrt(d), a + sqrt(d))."""
    return (
        QuadraticNumber(params.a, -1, params.d),
        QuadraticNumber(params.a, 1, params.d),
    )


def floor_r_lambda2(params: SurfaceParams, r: int) -> int:
    """[r*lambda2] = r*a + [r*sqrt(d)], exactly."""
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    return r * params.a + isqrt(r * r * params.d)


def floor_r_lambda1(params: SurfaceParams, r: int) -> int:
    """[r*lambda1] = r*a - [r*sqrt(d)] - 1; r*sqrt(d) is irrational, so its
    ceiling is one more than its floor."""
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    return r * params.a - isqrt(r * r * params.d) - 1


def difference_class(params: SurfaceParams, m: int, r: int) -> DivisorClass:
    """Lattice coordinates of m*H - r*C."""
    return DivisorClass(m - r * params.a, -r * params.b, -r * params.c)


class ConePosition(enum.Enum):
    """Where m*H - r*C sits relative to the effective cone.

    AMPLE_DIFFERENCE: r*lambda2 < m, the difference itself is ample.
    NEITHER_CONE:     r*lambda1 < m < r*lambda2, neither the difference nor
                      its negative is effective.
    AMPLE_NEGATIVE:   m < r*lambda1, the negated class r*C - m*H is ample.
    """

    AMPLE_DIFFERENCE = "ample-difference"
    NEITHER_CONE = "neither-cone"
    AMPLE_NEGATIVE = "ample-negative"


def cone_position(params: SurfaceParams, m: int, r: int) -> ConePosition:
    """Exact trichotomy of m against r*lambda1 and r*lambda2.

    Equality is impossible since the roots are irrational; the assertions
    guard the implementation, they are not user-facing errors.
    """
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    above = QuadraticNumber(m - r * params.a, -r, params.d).sign()
    assert above != 0, "m cannot equal the irrational r*lambda2"
    if above > 0:
        return ConePosition.AMPLE_DIFFERENCE
    below = QuadraticNumber(m - r * params.a, r, params.d).sign()
    assert below != 0, "m cannot equal the irrational r*lambda1"
    if below < 0:
        return ConePosition.AMPLE_NEGATIVE
    return ConePosition.NEITHER_CONE
