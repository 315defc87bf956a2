"""Proven cohomology dimensions on the quartic surface and on the blowup of P^3.

Values are exposed as CohomologyValue, which is either a known nonnegative
dimension or Unknown. Unknown marks twists that fall outside the regions
where the vanishing statements apply; the module never extrapolates beyond
them, so downstream consumers can distinguish "proved zero" from "not
determined".

On the surface, h^1(m*H - r*C) vanishes above the upper pencil root and
equals -q/2 - 2 = 2*(r^2*d - (m - r*a)^2) - 2 strictly between the roots.
On the blowup of P^3 along the curve, the pushforward identification turns
twists of powers of the curve's ideal sheaf into classes m*Hbar - r*E, with
h^1 known at and above the twist [r*lambda2] - 1, h^2 known above
r*lambda1, and h^3 known above 4r. The correction bit sigma(r) is 0 exactly
when r^2*d - 1 is a perfect square, which ties the exceptional exponents to
the negative Pell equation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .lattice import h0_ample
from .pell import NegativePellUnsolvableError, iter_negative_pell_solutions, negative_pell_solvable
from .quadratic import is_perfect_square
from .surface import (
    ConePosition,
    SurfaceParams,
    cone_position,
    difference_class,
    floor_r_lambda1,
    floor_r_lambda2,
    require_strict,
)


@dataclass(frozen=True)
class CohomologyValue:
    """A proven dimension (value >= 0) or Unknown (value is None)."""

    value: int | None

    def __post_init__(self) -> None:
        if self.value is not None and self.value < 0:
            raise ValueError(f"dimension cannot be negative: {self.value}")

    @property
    def is_known(self) -> bool:
        return self.value is not None

    @property
    def known_zero(self) -> bool:
        return self.value == 0

    @property
    def known_nonzero(self) -> bool:
        return self.value is not None and self.value > 0

    def __str__(self) -> str:
        return "unknown" if self.value is None else f"known {self.value}"


def known(value: int) -> CohomologyValue:
    return CohomologyValue(value)


UNKNOWN = CohomologyValue(None)


class UnknownValueError(ValueError):
    """A computation needed a cohomology value outside the proven regions."""

    def __init__(self, m: int, r: int, i: int):
        self.m, self.r, self.i = m, r, i
        super().__init__(f"h^{i} at twist m={m}, exponent r={r} is not determined")


SigmaMethod = Literal["square-test", "h1-formula", "pell-membership"]


def h_surface(params: SurfaceParams, m: int, r: int, i: int) -> CohomologyValue:
    """h^i(m*H - r*C) on the quartic surface, where proven.

    i=1 vanishes above the upper root and equals the strip formula between
    the roots; i=2 vanishes above the lower root; i=0 is the Riemann-Roch
    count for ample differences and 0 in the strip. Everything below the
    lower root is Unknown.
    """
    if i not in (0, 1, 2):
        raise ValueError(f"surface cohomology index must be 0, 1 or 2, got {i}")
    if r < 0:
        raise ValueError(f"exponent must be >= 0, got {r}")
    if r == 0:
        # Multiples of the hyperplane class; the strip is empty.
        if m <= 0:
            return UNKNOWN
        return known(h0_ample(difference_class(params, m, 0))) if i == 0 else known(0)
    position = cone_position(params, m, r)
    if position is ConePosition.AMPLE_DIFFERENCE:
        if i == 0:
            return known(h0_ample(difference_class(params, m, r)))
        return known(0)
    if position is ConePosition.NEITHER_CONE:
        if i == 1:
            offset = m - r * params.a
            value = 2 * (r * r * params.d - offset * offset) - 2
            assert value >= 0, "strip values are nonnegative for integer twists"
            return known(value)
        return known(0)  # h^0 vanishes in the strip, h^2 above the lower root
    return UNKNOWN


def h_blowup(params: SurfaceParams, m: int, r: int, i: int) -> CohomologyValue:
    """h^i(m*Hbar - r*E) on the blowup of P^3 along the curve, where proven.

    The vanishing statements hold in the strict parameter regime; for
    lattice-only parameters nothing is established here, so every value is
    Unknown. The h^3 vanishing is applied only strictly above 4r, not at
    equality.
    """
    if i not in (1, 2, 3):
        raise ValueError(f"blowup cohomology index must be 1, 2 or 3, got {i}")
    if r < 0:
        raise ValueError(f"exponent must be >= 0, got {r}")
    if not params.is_strict:
        return UNKNOWN
    if r == 0:
        return known(0) if m >= 0 else UNKNOWN
    if i == 1:
        top = floor_r_lambda2(params, r)
        if m > top:  # m > r*lambda2, the floor being strictly below the root
            return known(0)
        if m in (top, top - 1):
            return h_surface(params, m, r, 1)
        return UNKNOWN
    if i == 2:
        return known(0) if m > floor_r_lambda1(params, r) else UNKNOWN
    return known(0) if m > 4 * r else UNKNOWN


def h_ideal_power(params: SurfaceParams, m: int, r: int, i: int) -> CohomologyValue:
    """h^i of the m-twist of the r-th power of the curve's ideal sheaf.

    Pushing forward from the blowup identifies these with h^i(m*Hbar - r*E);
    the higher direct images vanish, so the values agree exactly.
    """
    if i == 0:
        raise ValueError("h^0 of ideal-sheaf twists is not provided")
    if m < 0 or r < 0:
        raise ValueError(f"twist and exponent must be >= 0, got m={m}, r={r}")
    return h_blowup(params, m, r, i)


def sigma(params: SurfaceParams, r: int, method: SigmaMethod = "square-test") -> int:
    """The 0/1 regularity correction at exponent r, by one of three routes.

    square-test:      0 iff r^2*d - 1 is a perfect square (total, preferred).
    h1-formula:       0 iff h^1 at the top twist [r*lambda2] vanishes.
    pell-membership:  0 iff r occurs as the r component of a solution of
                      s^2 - d*r^2 = -1; requires the equation to be solvable.
    """
    require_strict(params, "sigma")
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    if method == "square-test":
        return 0 if is_perfect_square(r * r * params.d - 1) else 1
    if method == "h1-formula":
        top = h_surface(params, floor_r_lambda2(params, r), r, 1)
        assert top.is_known, "top twist lies in the strip for strict parameters"
        return 0 if top.known_zero else 1
    if method == "pell-membership":
        if not negative_pell_solvable(params.d):
            raise NegativePellUnsolvableError(
                f"s^2 - {params.d}*r^2 = -1 has no solutions; "
                "use the square-test method instead"
            )
        for solution in iter_negative_pell_solutions(params.d):
            if solution.r == r:
                return 0
            if solution.r > r:
                return 1
    raise ValueError(f"unknown sigma method {method!r}")


def h1_threshold_witness(params: SurfaceParams, r: int) -> bool:
    """Check that h^1 is nonzero at the top twist or just below it.

    Either h^1([r*lambda2]*H - r*C) > 0, or it is 0 and
    h^1(([r*lambda2]-1)*H - r*C) != 0. This disjunction is what pins the
    regularity scan to a unique answer; it holds for every strict parameter
    set, so the function exists as a runtime check of the implementation.
    Encountering Unknown here signals a vanishing-region bug.
    """
    require_strict(params, "h1_threshold_witness")
    if r < 1:
        raise ValueError(f"exponent must be >= 1, got {r}")
    top_twist = floor_r_lambda2(params, r)
    top = h_surface(params, top_twist, r, 1)
    if not top.is_known:
        raise UnknownValueError(top_twist, r, 1)
    if top.known_nonzero:
        return True
    below = h_surface(params, top_twist - 1, r, 1)
    if not below.is_known:
        raise UnknownValueError(top_twist - 1, r, 1)
    return below.known_nonzero
