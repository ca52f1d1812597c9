"""Named verification checks over every quantitative claim in the package.

Each check returns a :class:`CheckResult` with the worst observed
residual and its declared tolerance; `taiji verify` prints one line per
check and `taiji analyze` embeds the identity subset in its report.

Checks that probe the curve itself accept the curve function as an
argument.  That keeps the comparison an honest two-path computation (the
lever route vs. the closed form) and lets the test suite confirm that a
deliberately broken curve is caught rather than silently accepted.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

from .analysis import find_extrema, integrate
from .curve import (
    X_AT_MAX,
    X_AT_MIN,
    _radicand,
    chord_at,
    landmarks,
    lever_interpolate,
    s_curve_derivative,
    s_curve_y,
)
from .pythagoras import complement_pair, make_triangle, membership_yang, membership_yin
from .render import DiagramSpec, dark_disk_fraction, eye_clearance, render_construction, render_diagram

__all__ = ["CheckResult", "run_checks", "identity_checks", "CurveFn"]

CurveFn = Callable[[float], float]

DEFAULT_SEED = 715
SWEEP = 10_000

TOL_IDENTITY = 1e-12
TOL_ROOT = 1e-9
TOL_AREA = 1e-8
TOL_QUAD = 1e-9  # 10x the default quadrature target
TOL_DERIV = 1e-6
TOL_RASTER = 5e-3
PI_8 = math.pi / 8.0
PI_4 = math.pi / 4.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_abs_residual: float
    tolerance: float
    passed: bool


def _result(name: str, residual: float, tol: float) -> CheckResult:
    return CheckResult(name, residual, tol, residual <= tol)


def check_complement_sum(seed: int = DEFAULT_SEED) -> CheckResult:
    """yang + yin = 1 for random right triangles with legs in (1e-3, 1e3)."""
    rng = random.Random(seed)
    worst = 0.0
    for _ in range(SWEEP):
        pair = complement_pair(make_triangle(rng.uniform(1e-3, 1e3), rng.uniform(1e-3, 1e3)))
        worst = max(worst, abs(pair.yang + pair.yin - 1.0))
    return _result("complement_sum", worst, TOL_IDENTITY)


def check_complement_scale_invariance(seed: int = DEFAULT_SEED) -> CheckResult:
    """The quotients depend only on the leg ratio, not the scale."""
    rng = random.Random(seed + 1)
    worst = 0.0
    for _ in range(SWEEP // 10):
        a, b = rng.uniform(1e-3, 1e3), rng.uniform(1e-3, 1e3)
        k = rng.uniform(1e-3, 1e3)
        p = complement_pair(make_triangle(a, b))
        q = complement_pair(make_triangle(k * a, k * b))
        worst = max(worst, abs(p.yang - q.yang), abs(p.yin - q.yin))
    return _result("complement_scale_invariance", worst, TOL_IDENTITY)


def check_membership_sum(seed: int = DEFAULT_SEED) -> CheckResult:
    """sin^2 + cos^2 = 1 for random angles in [-10, 10]."""
    rng = random.Random(seed + 2)
    worst = 0.0
    for _ in range(SWEEP):
        alpha = rng.uniform(-10.0, 10.0)
        worst = max(worst, abs(membership_yang(alpha) + membership_yin(alpha) - 1.0))
    return _result("membership_sum", worst, TOL_IDENTITY)


def check_membership_periodicity(seed: int = DEFAULT_SEED) -> CheckResult:
    """Both membership functions repeat with period pi."""
    rng = random.Random(seed + 3)
    worst = 0.0
    for _ in range(SWEEP // 10):
        alpha = rng.uniform(-10.0, 10.0)
        worst = max(
            worst,
            abs(membership_yang(alpha + math.pi) - membership_yang(alpha)),
            abs(membership_yin(alpha + math.pi) - membership_yin(alpha)),
        )
    return _result("membership_periodicity", worst, TOL_IDENTITY)


def check_lever_equivalence(curve: CurveFn = s_curve_y) -> CheckResult:
    """Lever interpolation of the chord ordinates reproduces the closed form."""
    worst = 0.0
    for i in range(SWEEP):
        x = i / (SWEEP - 1)
        lever = lever_interpolate(x, chord_at(x))
        worst = max(worst, abs(lever - curve(x)))
    return _result("lever_vs_closed_form", worst, TOL_IDENTITY)


def check_point_symmetry(curve: CurveFn = s_curve_y, seed: int = DEFAULT_SEED) -> CheckResult:
    """y(x) + y(1 - x) = 1: the curve is symmetric about the center."""
    rng = random.Random(seed + 4)
    worst = 0.0
    for _ in range(SWEEP):
        x = rng.random()
        worst = max(worst, abs(curve(x) + curve(1.0 - x) - 1.0))
    return _result("point_symmetry", worst, TOL_IDENTITY)


def check_containment(curve: CurveFn = s_curve_y) -> CheckResult:
    """Every curve point stays inside or on the inscribed circle."""
    worst = 0.0
    for i in range(SWEEP + 1):
        x = i / SWEEP
        y = curve(x)
        worst = max(worst, (x - 0.5) ** 2 + (y - 0.5) ** 2 - 0.25)
    return _result("containment", max(worst, 0.0), TOL_IDENTITY)


def check_boundary_ordering(curve: CurveFn = s_curve_y) -> CheckResult:
    """The curve runs between the lower and upper circle ordinates."""
    worst = 0.0
    for i in range(SWEEP + 1):
        x = i / SWEEP
        y = curve(x)
        c = chord_at(x)
        worst = max(worst, c.y1 - y, y - c.y2)
    return _result("boundary_ordering", max(worst, 0.0), TOL_IDENTITY)


def check_sign_structure(curve: CurveFn = s_curve_y) -> CheckResult:
    """Strictly above 1/2 on (0, 1/2), strictly below on (1/2, 1)."""
    margin = math.inf
    for i in range(1, SWEEP // 2):
        x = i / SWEEP
        margin = min(margin, curve(x) - 0.5, 0.5 - curve(1.0 - x))
    return _result("sign_structure", max(0.0, -margin), 0.0)


def check_extrema_values(curve: CurveFn = s_curve_y) -> CheckResult:
    """The curve attains 3/4 and 1/4 at the closed-form abscissas."""
    residual = max(abs(curve(X_AT_MAX) - 0.75), abs(curve(X_AT_MIN) - 0.25))
    return _result("extrema_values", residual, TOL_IDENTITY)


def check_extrema_locations() -> CheckResult:
    """Bisection on the analytic derivative recovers 1/2 -+ sqrt(2)/4."""
    rep = find_extrema()
    residual = max(
        abs(rep.x_at_max - X_AT_MAX),
        abs(rep.x_at_min - X_AT_MIN),
        abs(rep.y_at_max - 0.75),
        abs(rep.y_at_min - 0.25),
        rep.residual,
    )
    return _result("extrema_locations", residual, TOL_ROOT)


def check_fish_eye_coordinates() -> CheckResult:
    """Landmarks match the independent algebraic forms (2 -+ sqrt(2))/4."""
    lm = landmarks()
    left = (2.0 - math.sqrt(2.0)) / 4.0
    right = (2.0 + math.sqrt(2.0)) / 4.0
    residual = max(
        abs(lm.eye_left.x - left),
        abs(lm.eye_right.x - right),
        abs(lm.eye_left.y - 0.5),
        abs(lm.eye_right.y - 0.5),
        abs(lm.x_max + lm.x_min - 1.0),
        abs(lm.y_max + lm.y_min - 1.0),
    )
    return _result("fish_eye_coordinates", residual, TOL_IDENTITY)


def _lower(x: float) -> float:
    return 0.5 - math.sqrt(_radicand(x))


def _upper(x: float) -> float:
    return 0.5 + math.sqrt(_radicand(x))


def check_area_split(curve: CurveFn = s_curve_y) -> list[CheckResult]:
    """Each fish region holds pi/8 of the disk; together they fill pi/4."""
    below, _ = integrate(lambda x: curve(x) - _lower(x), 0.0, 1.0)
    above, _ = integrate(lambda x: _upper(x) - curve(x), 0.0, 1.0)
    return [
        _result("area_below_curve", abs(below - PI_8), TOL_AREA),
        _result("area_above_curve", abs(above - PI_8), TOL_AREA),
        _result("area_disk_partition", abs(below + above - PI_4), TOL_AREA),
    ]


def check_curve_integral(curve: CurveFn = s_curve_y) -> CheckResult:
    """Point symmetry forces the curve to integrate to exactly 1/2."""
    whole, _ = integrate(curve, 0.0, 1.0)
    return _result("curve_integral_one_half", abs(whole - 0.5), TOL_QUAD)


def check_quadrature_odd_symmetry() -> CheckResult:
    """The integrator annihilates a function odd about x = 1/2."""
    value, _ = integrate(lambda x: (1.0 - 2.0 * x) * math.sqrt(_radicand(x)), 0.0, 1.0)
    return _result("quadrature_odd_symmetry", abs(value), TOL_QUAD)


def check_quadrature_half_disk() -> CheckResult:
    """The integrator reproduces the half-disk area pi/8."""
    value, _ = integrate(lambda x: math.sqrt(_radicand(x)), 0.0, 1.0)
    return _result("quadrature_half_disk", abs(value - PI_8), TOL_QUAD)


def check_derivative_finite_diff(seed: int = DEFAULT_SEED) -> CheckResult:
    """Analytic slope vs. central difference at random interior points."""
    rng = random.Random(seed + 5)
    h = 1e-6
    worst = 0.0
    for _ in range(1000):
        x = rng.uniform(0.01, 0.99)
        fd = (s_curve_y(x + h) - s_curve_y(x - h)) / (2.0 * h)
        worst = max(worst, abs(s_curve_derivative(x) - fd))
    return _result("derivative_finite_diff", worst, TOL_DERIV)


def check_render_determinism() -> CheckResult:
    """Rendering the same spec twice yields byte-identical SVG."""
    spec = DiagramSpec()
    construction = DiagramSpec(include_line=True)
    same = render_diagram(spec) == render_diagram(spec) and render_construction(
        construction
    ) == render_construction(construction)
    return _result("render_determinism", 0.0 if same else 1.0, 0.0)


def check_raster_dark_fraction(grid: int = 1024) -> CheckResult:
    """Point-in-path rasterization puts half the disk in the dark fish."""
    fraction = dark_disk_fraction(DiagramSpec(), grid=grid)
    return _result("raster_dark_fraction", abs(fraction - 0.5), TOL_RASTER)


def check_eye_containment() -> CheckResult:
    """Both eye disks sit strictly inside their fish regions."""
    spec = DiagramSpec()
    return _result("eye_containment", max(0.0, spec.eye_radius - eye_clearance(spec)), 0.0)


def identity_checks(curve: CurveFn = s_curve_y, seed: int = DEFAULT_SEED) -> list[CheckResult]:
    """The identity subset embedded in the analysis report."""
    return [
        check_complement_sum(seed),
        check_membership_sum(seed),
        check_lever_equivalence(curve),
        check_point_symmetry(curve, seed),
        check_containment(curve),
    ]


def run_checks(
    curve: CurveFn = s_curve_y,
    seed: int = DEFAULT_SEED,
    include_render: bool = True,
    raster_grid: int = 1024,
) -> list[CheckResult]:
    """Run the full suite in a fixed order and return every result."""
    results = [
        check_complement_sum(seed),
        check_complement_scale_invariance(seed),
        check_membership_sum(seed),
        check_membership_periodicity(seed),
        check_lever_equivalence(curve),
        check_point_symmetry(curve, seed),
        check_containment(curve),
        check_boundary_ordering(curve),
        check_sign_structure(curve),
        check_extrema_values(curve),
        check_extrema_locations(),
        check_fish_eye_coordinates(),
        *check_area_split(curve),
        check_curve_integral(curve),
        check_quadrature_odd_symmetry(),
        check_quadrature_half_disk(),
        check_derivative_finite_diff(seed),
    ]
    if include_render:
        results += [
            check_render_determinism(),
            check_raster_dark_fraction(raster_grid),
            check_eye_containment(),
        ]
    return results
