"""Deterministic SVG emission of the double-fish figure.

Unit coordinates map to pixels by ``px = x * size`` and ``py = (1 - y) *
size`` (mathematical y-up to screen y-down).  Every geometric number is
serialized with exactly six decimal digits in fixed notation, elements
are emitted in a fixed order, and nothing depends on time or randomness,
so identical specs produce byte-identical documents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .core import InvalidSpec
from .curve import X_AT_MAX, X_AT_MIN, s_curve_y

__all__ = [
    "DiagramSpec",
    "render_diagram",
    "render_construction",
    "dark_region_polygon",
    "dark_disk_fraction",
    "eye_clearance",
]

DARK = "#000000"
LIGHT = "#ffffff"

MIN_CANVAS = 64
MIN_SAMPLES = 64
MAX_EYE_RADIUS = 0.25


@dataclass(frozen=True)
class DiagramSpec:
    """Rendering degrees of freedom left open by the figure itself.

    ``dark_below`` picks which fish is filled dark (default: the region
    below the curve, the one holding the left eye).  The default eye
    radius 1/24 sits well inside either fish.
    """

    canvas_px: int = 512
    samples: int = 256
    eye_radius: float = 1.0 / 24.0
    dark_below: bool = True
    include_square: bool = False
    include_line: bool = False

    def __post_init__(self) -> None:
        if self.canvas_px < MIN_CANVAS:
            raise InvalidSpec(f"canvas_px must be >= {MIN_CANVAS}, got {self.canvas_px}")
        if self.samples < MIN_SAMPLES:
            raise InvalidSpec(f"samples must be >= {MIN_SAMPLES}, got {self.samples}")
        if not (0.0 < self.eye_radius < MAX_EYE_RADIUS):
            raise InvalidSpec(
                f"eye_radius must lie in (0, {MAX_EYE_RADIUS}), got {self.eye_radius}"
            )


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _px(x: float, y: float, size: float) -> tuple[str, str]:
    return _fmt(x * size), _fmt((1.0 - y) * size)


def _curve_points(samples: int) -> list[tuple[float, float]]:
    step = samples - 1
    return [(i / step, s_curve_y(i / step)) for i in range(samples)]


def _header(spec: DiagramSpec) -> str:
    n = spec.canvas_px
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{n}" height="{n}" viewBox="0 0 {n} {n}">'
    )

def _square(size: float) -> str:
    w = _fmt(size)
    return (
        f'<rect x="{_fmt(0.0)}" y="{_fmt(0.0)}" width="{w}" height="{w}" '
        f'fill="none" stroke="{DARK}" stroke-width="1"/>'
    )


def _circle_outline(size: float) -> str:
    c = _fmt(0.5 * size)
    return f'<circle cx="{c}" cy="{c}" r="{c}" fill="none" stroke="{DARK}" stroke-width="1"/>'


def _diagonal_line(size: float, dashed: bool) -> str:
    # the segment x + y = 1, from (0, 1) to (1, 0)
    x1, y1 = _px(0.0, 1.0, size)
    x2, y2 = _px(1.0, 0.0, size)
    dash = ' stroke-dasharray="6 4"' if dashed else ""
    return (
        f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" '
        f'stroke="{DARK}" stroke-width="1"{dash}/>'
    )


def _fish_path(spec: DiagramSpec, lower: bool) -> str:
    """Closed path: the curve polyline plus the matching semicircular arc.

    ``lower`` selects the semicircle through (1/2, 0); in screen
    coordinates that arc bends clockwise (sweep flag 1), the upper one
    counterclockwise (sweep flag 0).
    """
    size = float(spec.canvas_px)
    pts = [_px(x, y, size) for x, y in _curve_points(spec.samples)]
    start = f"{pts[0][0]},{pts[0][1]}"
    moves = " L ".join(f"{x},{y}" for x, y in pts[1:])
    r = _fmt(0.5 * size)
    sweep = 1 if lower else 0
    return f"M {start} L {moves} A {r} {r} 0 0 {sweep} {start} Z"


def _eyes(spec: DiagramSpec) -> list[str]:
    # Each eye takes the color opposite to its surrounding fish; the left
    # eye sits in the region below the curve.
    size = float(spec.canvas_px)
    below_fill, above_fill = (DARK, LIGHT) if spec.dark_below else (LIGHT, DARK)
    r = _fmt(spec.eye_radius * size)
    out = []
    for eye_x, region_fill in ((X_AT_MAX, below_fill), (X_AT_MIN, above_fill)):
        cx, cy = _px(eye_x, 0.5, size)
        opposite = LIGHT if region_fill == DARK else DARK
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="{opposite}" stroke="none"/>')
    return out


def render_diagram(spec: DiagramSpec) -> bytes:
    """SVG of the standard figure: circle, two fish fills, two eyes."""
    size = float(spec.canvas_px)
    parts = [_header(spec)]
    if spec.include_square:
        parts.append(_square(size))
    parts.append(_circle_outline(size))
    dark_d = _fish_path(spec, lower=spec.dark_below)
    light_d = _fish_path(spec, lower=not spec.dark_below)
    parts.append(f'<path d="{dark_d}" fill="{DARK}" stroke="none"/>')
    parts.append(f'<path d="{light_d}" fill="{LIGHT}" stroke="none"/>')
    parts.extend(_eyes(spec))
    if spec.include_line:
        parts.append(_diagonal_line(size, dashed=False))
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("utf-8")


def render_construction(spec: DiagramSpec) -> bytes:
    """SVG relating the line x + y = 1 to its curved image.

    Emits the unit square, the inscribed circle, the dashed straight
    segment and the solid curve polyline.  The spec must have
    ``include_line`` set; the two strokes cross only at the center.
    """
    if not spec.include_line:
        raise InvalidSpec("construction figure requires include_line")
    size = float(spec.canvas_px)
    pts = [_px(x, y, size) for x, y in _curve_points(spec.samples)]
    points = " ".join(f"{x},{y}" for x, y in pts)
    parts = [
        _header(spec),
        _square(size),
        _circle_outline(size),
        _diagonal_line(size, dashed=True),
        f'<polyline points="{points}" fill="none" stroke="{DARK}" stroke-width="1"/>',
        "</svg>",
    ]
    return ("\n".join(parts) + "\n").encode("utf-8")


def dark_region_polygon(spec: DiagramSpec) -> tuple[np.ndarray, np.ndarray]:
    """Unit-coordinate vertex arrays of the dark fish path.

    The curve polyline runs left to right; the closing semicircle is
    discretized at the same density (its endpoints coincide with the
    polyline's, so they are not repeated).
    """
    pts = _curve_points(spec.samples)
    m = spec.samples
    sign = -1.0 if spec.dark_below else 1.0
    angles = [sign * math.pi * k / m for k in range(1, m)]
    xs = [p[0] for p in pts] + [0.5 + 0.5 * math.cos(a) for a in angles]
    ys = [p[1] for p in pts] + [0.5 + 0.5 * math.sin(a) for a in angles]
    return np.asarray(xs), np.asarray(ys)


def dark_disk_fraction(spec: DiagramSpec, grid: int = 1024) -> float:
    """Fraction of the disk covered by the dark fish, on a pixel-center grid.

    The geometric answer is exactly 1/2: each fish holds pi/8 of the
    disk's pi/4.
    """
    poly_x, poly_y = dark_region_polygon(spec)
    g = (np.arange(grid) + 0.5) / grid
    mask = kernels.polygon_grid_mask(poly_x, poly_y, g, g)
    dx = g[None, :] - 0.5
    dy = g[:, None] - 0.5
    disk = dx * dx + dy * dy <= 0.25
    return float(np.count_nonzero(mask & disk) / np.count_nonzero(disk))


def eye_clearance(spec: DiagramSpec, samples: int = 8192) -> float:
    """Smallest distance from either eye center to its region boundary.

    The boundary of each fish is the S-curve plus a semicircular arc;
    distance to the arc is radial, distance to the curve is taken over a
    dense polyline.
    """
    xs = np.arange(samples + 1) / samples
    ys = kernels.s_curve_values(xs)
    clearance = math.inf
    for ex in (X_AT_MAX, X_AT_MIN):
        to_arc = 0.5 - abs(ex - 0.5)
        to_curve = math.sqrt(float(np.min((xs - ex) ** 2 + (ys - 0.5) ** 2)))
        clearance = min(clearance, to_arc, to_curve)
    return clearance
