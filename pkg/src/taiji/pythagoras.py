"""Right-triangle complementarity and the trigonometric membership pair.

A right triangle with legs ``a``, ``b`` and hypotenuse ``c`` splits unity
into two complementary quotients ``(a/c)**2 + (b/c)**2 = 1``.  The same
split, parametrized by an angle, gives the membership pair
``sin(alpha)**2`` / ``cos(alpha)**2``, which sums to one for every angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DEFAULT_TOL, NonFinite, NonPositiveLeg, Tolerance, clamp_unit

__all__ = [
    "RightTriangle",
    "ComplementPair",
    "make_triangle",
    "complement_pair",
    "membership_yang",
    "membership_yin",
]


@dataclass(frozen=True)
class RightTriangle:
    """Legs ``a``, ``b`` and hypotenuse ``c`` of a right triangle."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise NonFinite(f"side {name} must be finite, got {v}")
        if self.a <= 0.0 or self.b <= 0.0:
            raise NonPositiveLeg(f"legs must be positive, got a={self.a}, b={self.b}")
        if self.c <= 0.0 or self.a >= self.c or self.b >= self.c:
            raise ValueError(f"hypotenuse must exceed both legs, got {self}")
        # Normalized Pythagorean residual; the ratio form avoids overflow.
        residual = abs((self.a / self.c) ** 2 + (self.b / self.c) ** 2 - 1.0)
        if residual > DEFAULT_TOL.abs_eps:
            raise ValueError(f"sides are not Pythagorean: residual {residual:.3e}")


@dataclass(frozen=True)
class ComplementPair:
    """Complementary yang/yin quotients of a right triangle; sums to 1."""

    yang: float
    yin: float

    def __post_init__(self) -> None:
        clamp_unit(self.yang)
        clamp_unit(self.yin)
        if abs(self.yang + self.yin - 1.0) > DEFAULT_TOL.abs_eps:
            raise ValueError(f"yang + yin must be 1, got {self.yang + self.yin}")


def make_triangle(a: float, b: float) -> RightTriangle:
    """Build the right triangle with legs ``a``, ``b``; the hypotenuse follows."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise NonFinite(f"legs must be finite, got a={a}, b={b}")
    if a <= 0.0 or b <= 0.0:
        raise NonPositiveLeg(f"legs must be positive, got a={a}, b={b}")
    return RightTriangle(a, b, math.hypot(a, b))


def complement_pair(t: RightTriangle) -> ComplementPair:
    """Split unity by ``t``: yang = (a/c)**2, yin = (b/c)**2."""
    return ComplementPair(yang=clamp_unit((t.a / t.c) ** 2), yin=clamp_unit((t.b / t.c) ** 2))


def membership_yang(alpha: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Yang membership ``sin(alpha)**2``, clamped into [0, 1]."""
    if not math.isfinite(alpha):
        raise NonFinite(f"angle must be finite, got {alpha}")
    return clamp_unit(math.sin(alpha) ** 2, tol)


def membership_yin(alpha: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Yin membership ``cos(alpha)**2``, clamped into [0, 1]."""
    if not math.isfinite(alpha):
        raise NonFinite(f"angle must be finite, got {alpha}")
    return clamp_unit(math.cos(alpha) ** 2, tol)
