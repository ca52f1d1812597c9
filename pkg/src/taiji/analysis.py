"""Numerical verification kernels: adaptive quadrature and root bracketing.

These exist to *confirm* the closed-form claims independently, so they
deliberately avoid the shortcuts the closed forms would allow.

Analytic oracle for the region areas, recorded here because the
quadrature below is checked against it.  Write R(x) = sqrt(1/4 - (x -
1/2)**2).  The gap between the curve and the lower circle boundary is

    [1/2 + (1 - 2x) R] - [1/2 - R] = 2 (1 - x) R,

so the area below the curve inside the disk is

    A = int_0^1 2 (1 - x) R dx = 2 int R dx - 2 int x R dx
      = 2 (pi/8) - 2 (pi/16) = pi/8,

using that int_0^1 R dx is the half-disk area pi/8 and that R is even
about x = 1/2, which forces int x R dx = (1/2) int R dx.  The region
above the curve is congruent by point symmetry, so each fish holds half
the disk area pi/4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .core import DEFAULT_TOL, MaxDepthExceeded, NoSignChange, Tolerance
from .curve import _radicand, s_curve_derivative, s_curve_y

__all__ = [
    "AreaReport",
    "ExtremaReport",
    "integrate",
    "region_areas",
    "find_extrema",
]

MAX_DEPTH = 60

# Root brackets stay this far inside (0, 1): the derivative has a vertical
# tangent at the endpoints, while its zeros sit near 0.146 and 0.854.
BRACKET_MARGIN = 1e-6


@dataclass(frozen=True)
class AreaReport:
    """Areas of the two fish regions and the curve integral, by quadrature."""

    area_below_curve_in_disk: float
    area_above_curve_in_disk: float
    disk_area: float
    integral_of_curve_over_unit_interval: float
    quadrature_error_estimate: float


@dataclass(frozen=True)
class ExtremaReport:
    """Derivative zeros located by bisection, with the achieved residual."""

    x_at_max: float
    y_at_max: float
    x_at_min: float
    y_at_min: float
    residual: float


def _simpson(fa: float, fm: float, fb: float, h: float) -> float:
    return h * (fa + 4.0 * fm + fb) / 6.0


def _adapt(f, a, fa, m, fm, b, fb, whole, eps, depth):
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(fa, flm, fm, m - a)
    right = _simpson(fm, frm, fb, b - m)
    delta = left + right - whole
    # Richardson: Simpson halving overestimates the residual by ~15x.
    if abs(delta) <= 15.0 * eps:
        return left + right + delta / 15.0, abs(delta) / 15.0
    if depth <= 0:
        raise MaxDepthExceeded(
            f"no convergence on [{a}, {b}] after {MAX_DEPTH} subdivisions"
        )
    lv, le = _adapt(f, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth - 1)
    rv, re = _adapt(f, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth - 1)
    return lv + rv, le + re


def integrate(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: Tolerance = DEFAULT_TOL,
) -> tuple[float, float]:
    """Adaptive Simpson integral of ``f`` over ``[lo, hi]``.

    Returns ``(value, error_estimate)``; the subdivision targets an
    absolute error of ``tol.quad_eps`` and tolerates square-root behavior
    at the endpoints.  Raises :class:`MaxDepthExceeded` past depth 60.
    """
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    m = 0.5 * (lo + hi)
    fa, fm, fb = f(lo), f(m), f(hi)
    whole = _simpson(fa, fm, fb, hi - lo)
    return _adapt(f, lo, fa, m, fm, hi, fb, whole, tol.quad_eps, MAX_DEPTH)


def _chord_lower(x: float) -> float:
    return 0.5 - math.sqrt(_radicand(x))


def _chord_upper(x: float) -> float:
    return 0.5 + math.sqrt(_radicand(x))


def region_areas(tol: Tolerance = DEFAULT_TOL) -> AreaReport:
    """Quadrature areas of both fish regions; each should come out pi/8."""
    below, err_below = integrate(lambda x: s_curve_y(x) - _chord_lower(x), 0.0, 1.0, tol)
    above, err_above = integrate(lambda x: _chord_upper(x) - s_curve_y(x), 0.0, 1.0, tol)
    whole, err_whole = integrate(s_curve_y, 0.0, 1.0, tol)
    return AreaReport(
        area_below_curve_in_disk=below,
        area_above_curve_in_disk=above,
        disk_area=math.pi / 4.0,
        integral_of_curve_over_unit_interval=whole,
        quadrature_error_estimate=err_below + err_above + err_whole,
    )


def _bisect_bracket(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    max_iter: int = 200,
    xtol: float = 0.0,
) -> tuple[float, float]:
    """Shrink ``[lo, hi]`` around a sign change of ``f`` by bisection.

    The bracket halves every iteration until ``xtol`` is reached, the
    midpoint stops being representable, or ``max_iter`` runs out.
    """
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo, lo
    if fhi == 0.0:
        return hi, hi
    if (flo > 0.0) == (fhi > 0.0):
        raise NoSignChange(f"f has the same sign at {lo} and {hi}")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = f(mid)
        if fmid == 0.0:
            return mid, mid
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        if hi - lo <= xtol:
            break
    return lo, hi


def find_extrema(tol: Tolerance = DEFAULT_TOL) -> ExtremaReport:
    """Locate both derivative zeros of the S-curve by bisection.

    Brackets ``[1e-6, 1/2 - 1e-6]`` and ``[1/2 + 1e-6, 1 - 1e-6]`` avoid
    the endpoint singularities; the left zero is the maximum.
    """
    lo1, hi1 = _bisect_bracket(s_curve_derivative, BRACKET_MARGIN, 0.5 - BRACKET_MARGIN)
    lo2, hi2 = _bisect_bracket(s_curve_derivative, 0.5 + BRACKET_MARGIN, 1.0 - BRACKET_MARGIN)
    x_max = 0.5 * (lo1 + hi1)
    x_min = 0.5 * (lo2 + hi2)
    residual = max(abs(s_curve_derivative(x_max)), abs(s_curve_derivative(x_min)))
    return ExtremaReport(
        x_at_max=x_max,
        y_at_max=s_curve_y(x_max),
        x_at_min=x_min,
        y_at_min=s_curve_y(x_min),
        residual=residual,
    )
