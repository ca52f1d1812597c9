"""Shared scalar primitives: tolerance policy, 2-D points, error taxonomy.

Unit-interval values are plain ``float``s; :func:`clamp_unit` is the single
entry point that enforces (and gently repairs) the ``[0, 1]`` constraint.
All quantities in this package are double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "Point2",
    "TaijiError",
    "OutOfUnitInterval",
    "NonPositiveLeg",
    "NonFinite",
    "ChordMismatch",
    "EndpointSingularity",
    "TooFewSamples",
    "MaxDepthExceeded",
    "NoSignChange",
    "InvalidSpec",
    "clamp_unit",
    "approx_eq",
]


class TaijiError(Exception):
    """Base class for all errors raised by this package."""


class OutOfUnitInterval(TaijiError):
    """A value lies outside [0, 1] by more than the absolute tolerance."""


class NonPositiveLeg(TaijiError):
    """A triangle leg is zero or negative."""


class NonFinite(TaijiError):
    """An input is NaN or infinite."""


class ChordMismatch(TaijiError):
    """A chord's abscissa disagrees with the interpolation abscissa."""


class EndpointSingularity(TaijiError):
    """The curve derivative is requested where the tangent is vertical."""


class TooFewSamples(TaijiError):
    """A discretization was requested with fewer than two points."""


class MaxDepthExceeded(TaijiError):
    """Adaptive quadrature subdivided past its depth cap without converging."""


class NoSignChange(TaijiError):
    """A root bracket does not straddle a sign change."""


class InvalidSpec(TaijiError):
    """A rendering spec violates its invariants."""


@dataclass(frozen=True)
class Tolerance:
    """Comparison policy: ``abs_eps`` for identities, ``quad_eps`` for quadrature.

    The defaults are wide enough that every analytic identity in this
    package holds at double precision with margin.
    """

    abs_eps: float = 1e-12
    quad_eps: float = 1e-10

    def __post_init__(self) -> None:
        if not (self.abs_eps > 0.0 and self.quad_eps > 0.0):
            raise ValueError("tolerances must be positive")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Point2:
    """A point in diagram coordinates (unit square, y up)."""

    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFinite(f"point coordinates must be finite, got ({self.x}, {self.y})")


def clamp_unit(v: float, tol: Tolerance = DEFAULT_TOL) -> float:
    """Return ``v`` confined to [0, 1].

    Values within ``tol.abs_eps`` outside the interval snap to the nearest
    endpoint (this absorbs rounding like ``sin**2`` landing at ``1 + ulp``);
    anything further out raises :class:`OutOfUnitInterval`.
    """
    if not math.isfinite(v):
        raise NonFinite(f"expected a finite value, got {v}")
    if v < 0.0:
        if v < -tol.abs_eps:
            raise OutOfUnitInterval(f"{v} is below [0, 1] by more than {tol.abs_eps}")
        return 0.0
    if v > 1.0:
        if v > 1.0 + tol.abs_eps:
            raise OutOfUnitInterval(f"{v} is above [0, 1] by more than {tol.abs_eps}")
        return 1.0
    return v


def approx_eq(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff ``|a - b| <= tol.abs_eps``. Expects finite inputs."""
    return abs(a - b) <= tol.abs_eps
