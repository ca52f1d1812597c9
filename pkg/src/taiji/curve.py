"""The dividing S-curve of the double-fish figure, and its landmark points.

Geometry lives in the unit square with its inscribed circle
``(x - 1/2)**2 + (y - 1/2)**2 = 1/4``.  A vertical line at abscissa ``x``
meets the circle at the chord ordinates ``y1 <= y2``.  Weighting those two
ordinates like loads on a balanced lever, with arms ``x`` and ``1 - x``,
gives

    y = x*y1 + (1 - x)*y2

and substituting the circle ordinates collapses this to the closed form

    y = 1/2 + (1 - 2x) * sqrt(1/4 - (x - 1/2)**2),   x in [0, 1].

The curve starts and ends at height 1/2, rises to a maximum of 3/4 at
``x = 1/2 - sqrt(2)/4``, falls through the center to a minimum of 1/4 at
``x = 1/2 + sqrt(2)/4``, and is point-symmetric about (1/2, 1/2).  The two
"fish eyes" sit at the extremal abscissas at height 1/2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    DEFAULT_TOL,
    ChordMismatch,
    EndpointSingularity,
    Point2,
    Tolerance,
    TooFewSamples,
    clamp_unit,
)

__all__ = [
    "X_AT_MAX",
    "X_AT_MIN",
    "Y_MAX",
    "Y_MIN",
    "CurveMethod",
    "ChordPair",
    "CurveSample",
    "Landmarks",
    "chord_at",
    "lever_interpolate",
    "s_curve_y",
    "s_curve",
    "s_curve_derivative",
    "landmarks",
    "sample_curve",
]

# Closed-form landmark constants: the derivative vanishes where
# (1 - 2x)**2 = 1/2, i.e. at 1/2 -+ sqrt(2)/4.
X_AT_MAX = 0.5 - math.sqrt(2.0) / 4.0
X_AT_MIN = 0.5 + math.sqrt(2.0) / 4.0
Y_MAX = 0.75
Y_MIN = 0.25


class CurveMethod(enum.Enum):
    """Provenance of a curve sample: closed form or lever interpolation."""

    CLOSED_FORM = "closed_form"
    LEVER = "lever"


@dataclass(frozen=True)
class ChordPair:
    """Lower/upper ordinates of the inscribed circle at abscissa ``x``."""

    x: float
    y1: float
    y2: float

    def __post_init__(self) -> None:
        clamp_unit(self.x)
        half = math.sqrt(_radicand(self.x))
        eps = DEFAULT_TOL.abs_eps
        if abs(self.y1 - (0.5 - half)) > eps or abs(self.y2 - (0.5 + half)) > eps:
            raise ValueError(f"ordinates do not lie on the circle at x={self.x}")
        if not (self.y1 <= 0.5 <= self.y2):
            raise ValueError(f"expected y1 <= 1/2 <= y2, got {self}")


@dataclass(frozen=True)
class CurveSample:
    """An (x, y) point on the S-curve, tagged with how it was computed."""

    x: float
    y: float
    method: CurveMethod = CurveMethod.CLOSED_FORM

    def __post_init__(self) -> None:
        clamp_unit(self.x)
        clamp_unit(self.y)
        r2 = (self.x - 0.5) ** 2 + (self.y - 0.5) ** 2
        if r2 > 0.25 + DEFAULT_TOL.abs_eps:
            raise ValueError(f"sample ({self.x}, {self.y}) lies outside the disk")


@dataclass(frozen=True)
class Landmarks:
    """Named points of the S-curve: extremal abscissas, extrema, fish eyes.

    ``x_max``/``y_max`` locate the maximum (3/4 at ``1/2 - sqrt(2)/4``),
    ``x_min``/``y_min`` the minimum; the eyes share those abscissas at
    height 1/2.
    """

    x_max: float
    x_min: float
    y_max: float
    y_min: float
    eye_left: Point2
    eye_right: Point2


def _radicand(x: float) -> float:
    # 1/4 - (x - 1/2)**2, floored at zero so -ulp rounding at the
    # endpoints cannot produce a NaN under the square root.
    t = x - 0.5
    r = 0.25 - t * t
    return r if r > 0.0 else 0.0


def s_curve_y(x: float) -> float:
    """Closed-form curve ordinate at ``x``; no domain checks (hot path)."""
    return 0.5 + (1.0 - 2.0 * x) * math.sqrt(_radicand(x))


def chord_at(x: float, tol: Tolerance = DEFAULT_TOL) -> ChordPair:
    """Lower/upper circle ordinates ``1/2 -+ sqrt(1/4 - (x - 1/2)**2)``."""
    x = clamp_unit(x, tol)
    half = math.sqrt(_radicand(x))
    return ChordPair(x=x, y1=0.5 - half, y2=0.5 + half)


def lever_interpolate(x: float, chord: ChordPair, tol: Tolerance = DEFAULT_TOL) -> float:
    """Balance the chord ordinates with arms ``x`` and ``1 - x``.

    Returns ``x*y1 + (1 - x)*y2``, the ordinate at which the moments about
    the balance point match: ``(1 - x)/x == (y - y1)/(y2 - y)``.
    """
    x = clamp_unit(x, tol)
    if abs(chord.x - x) > tol.abs_eps:
        raise ChordMismatch(f"chord is at x={chord.x}, interpolation at x={x}")
    return x * chord.y1 + (1.0 - x) * chord.y2


def s_curve(x: float, tol: Tolerance = DEFAULT_TOL) -> CurveSample:
    """Closed-form sample of the S-curve at ``x`` in [0, 1]."""
    x = clamp_unit(x, tol)
    return CurveSample(x=x, y=s_curve_y(x), method=CurveMethod.CLOSED_FORM)


def s_curve_derivative(x: float) -> float:
    """Analytic slope ``-2R + (1 - 2x)**2 / (2R)`` with ``R`` the radicand root.

    Defined only on the open interval: the tangent is vertical at the
    endpoints, which raise :class:`EndpointSingularity` rather than
    returning an infinity.
    """
    if x <= 0.0 or x >= 1.0:
        raise EndpointSingularity(f"vertical tangent at x={x}")
    root = math.sqrt(_radicand(x))
    if root == 0.0:
        # x is so close to an endpoint that the radicand underflowed.
        raise EndpointSingularity(f"vertical tangent at x={x}")
    w = 1.0 - 2.0 * x
    return -2.0 * root + w * w / (2.0 * root)


def landmarks() -> Landmarks:
    """Landmark constants, all from closed-form expressions."""
    return Landmarks(
        x_max=X_AT_MAX,
        x_min=X_AT_MIN,
        y_max=Y_MAX,
        y_min=Y_MIN,
        eye_left=Point2(X_AT_MAX, 0.5),
        eye_right=Point2(X_AT_MIN, 0.5),
    )


def sample_curve(n: int, tol: Tolerance = DEFAULT_TOL) -> list[CurveSample]:
    """``n`` closed-form samples at the uniform abscissas ``i/(n - 1)``."""
    if n < 2:
        raise TooFewSamples(f"need at least 2 samples, got {n}")
    step = n - 1
    return [s_curve(i / step, tol) for i in range(n)]
