"""The rank-3 even lattice with intersection form q(x, y, z) = 4x^2 - 4y^2 - 4z^2.

This is the numerical divisor-class group of a quartic surface whose
hyperplane class is H = (1, 0, 0). The closed effective cone is
{q >= 0, x >= 0}; ample classes are its strict interior. Since every form
value is divisible by 4, the Riemann-Roch value q/2 + 2 is always an
integer.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinates (x, y, z) in the basis where H = (1, 0, 0)."""

    x: int
    y: int
    z: int

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-self.x, -self.y, -self.z)

    def __rmul__(self, scalar: int) -> DivisorClass:
        if not isinstance(scalar, int):
            return NotImplemented
        return DivisorClass(scalar * self.x, scalar * self.y, scalar * self.z)


HYPERPLANE = DivisorClass(1, 0, 0)


def form_q(cls: DivisorClass) -> int:
    """Self-intersection 4x^2 - 4y^2 - 4z^2."""
    return 4 * (cls.x * cls.x - cls.y * cls.y - cls.z * cls.z)


def pairing(a: DivisorClass, b: DivisorClass) -> int:
    """Polarization of the form: 4*(x1*x2 - y1*y2 - z1*z2)."""
    return 4 * (a.x * b.x - a.y * b.y - a.z * b.z)


def euler_char(cls: DivisorClass) -> int:
    """Riemann-Roch Euler characteristic q/2 + 2 (integral: the lattice is even)."""
    return form_q(cls) // 2 + 2


def in_effective_cone(cls: DivisorClass) -> bool:
    """Membership in the closed effective cone {q >= 0, x >= 0}."""
    return cls.x >= 0 and form_q(cls) >= 0


def is_ample(cls: DivisorClass) -> bool:
    """Strict interior of the effective cone: q > 0 and x > 0."""
    return cls.x > 0 and form_q(cls) > 0


def h0_ample(cls: DivisorClass) -> int:
    """Sections of an ample class: q/2 + 2. Only asserted for ample classes."""
    if not is_ample(cls):
        raise ValueError(f"h0 formula requires an ample class, got {cls}")
    return form_q(cls) // 2 + 2


def sectional_genus(cls: DivisorClass) -> int:
    """Genus q/2 + 1 of a smooth curve in the linear system of an ample class."""
    if not is_ample(cls):
        raise ValueError(f"sectional genus requires an ample class, got {cls}")
    return form_q(cls) // 2 + 1


def degree_in_p3(cls: DivisorClass) -> int:
    """Degree under the quartic embedding: pairing with the hyperplane class."""
    return pairing(cls, HYPERPLANE)
