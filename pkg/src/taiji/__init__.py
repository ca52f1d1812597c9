"""Lever-balance construction, verification, and rendering of the
classical yin-yang double-fish figure.

The dividing S-curve of the figure is the closed form
``y = 1/2 + (1 - 2x) * sqrt(1/4 - (x - 1/2)**2)`` on the unit interval,
obtained by lever-balancing the chord ordinates of the circle inscribed
in the unit square.  This package evaluates the curve, verifies every
quantitative property it has (extrema, symmetry, areas, complementarity
identities), and renders the figure as deterministic SVG.
"""

from .analysis import AreaReport, ExtremaReport, find_extrema, integrate, region_areas
from .checks import CheckResult, run_checks
from .core import (
    DEFAULT_TOL,
    ChordMismatch,
    EndpointSingularity,
    InvalidSpec,
    MaxDepthExceeded,
    NoSignChange,
    NonFinite,
    NonPositiveLeg,
    OutOfUnitInterval,
    Point2,
    TaijiError,
    Tolerance,
    TooFewSamples,
    approx_eq,
    clamp_unit,
)
from .curve import (
    X_AT_MAX,
    X_AT_MIN,
    Y_MAX,
    Y_MIN,
    ChordPair,
    CurveMethod,
    CurveSample,
    Landmarks,
    chord_at,
    landmarks,
    lever_interpolate,
    s_curve,
    s_curve_derivative,
    s_curve_y,
    sample_curve,
)
from .kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION
from .pythagoras import (
    ComplementPair,
    RightTriangle,
    complement_pair,
    make_triangle,
    membership_yang,
    membership_yin,
)
from .render import (
    DiagramSpec,
    dark_disk_fraction,
    eye_clearance,
    render_construction,
    render_diagram,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "KERNEL_IMPLEMENTATION",
    # core
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
    # pythagoras
    "RightTriangle",
    "ComplementPair",
    "make_triangle",
    "complement_pair",
    "membership_yang",
    "membership_yin",
    # curve
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
    # analysis
    "AreaReport",
    "ExtremaReport",
    "integrate",
    "region_areas",
    "find_extrema",
    # render
    "DiagramSpec",
    "render_diagram",
    "render_construction",
    "dark_disk_fraction",
    "eye_clearance",
    # checks
    "CheckResult",
    "run_checks",
]
