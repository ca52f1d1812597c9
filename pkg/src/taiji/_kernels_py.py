"""Pure-Python (numpy) kernels: bulk curve evaluation and grid rasterization.

Fallback for :mod:`taiji._kernels`.  Every operation here is written in
the same order as its compiled twin so the two produce bit-identical
arrays; the parity tests assert exact equality.  Inputs are expected to
be finite.
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def s_curve_values(xs) -> np.ndarray:
    """Curve ordinates 1/2 + (1 - 2x)*sqrt(1/4 - (x - 1/2)**2) for an array."""
    x = np.ascontiguousarray(xs, dtype=np.float64)
    t = x - 0.5
    r = 0.25 - t * t
    np.maximum(r, 0.0, out=r)
    return 0.5 + (1.0 - 2.0 * x) * np.sqrt(r)


def chord_values(xs) -> tuple[np.ndarray, np.ndarray]:
    """Lower and upper circle ordinates for an array of abscissas."""
    x = np.ascontiguousarray(xs, dtype=np.float64)
    t = x - 0.5
    r = 0.25 - t * t
    np.maximum(r, 0.0, out=r)
    half = np.sqrt(r)
    return 0.5 - half, 0.5 + half


def polygon_grid_mask(poly_x, poly_y, grid_x, grid_y) -> np.ndarray:
    """Even-odd membership mask of a polygon on a tensor grid.

    Returns a boolean array of shape ``(len(grid_y), len(grid_x))`` where
    ``mask[i, j]`` tells whether ``(grid_x[j], grid_y[i])`` lies inside the
    closed polygon.  Horizontal-ray crossing parity with the half-open rule
    ``(y1 > y) != (y2 > y)``; points exactly on an edge are unspecified.
    """
    px = np.ascontiguousarray(poly_x, dtype=np.float64)
    py = np.ascontiguousarray(poly_y, dtype=np.float64)
    gx = np.ascontiguousarray(grid_x, dtype=np.float64)
    gy = np.ascontiguousarray(grid_y, dtype=np.float64)
    x1, y1 = px, py
    x2, y2 = np.roll(px, -1), np.roll(py, -1)
    mask = np.zeros((gy.size, gx.size), dtype=bool)
    for i in range(gy.size):
        y = gy[i]
        straddle = (y1 > y) != (y2 > y)
        if not straddle.any():
            continue
        cross = (x2[straddle] - x1[straddle]) * (y - y1[straddle]) / (
            y2[straddle] - y1[straddle]
        ) + x1[straddle]
        cross.sort()
        # parity of the number of crossings strictly right of each grid x
        greater = cross.size - np.searchsorted(cross, gx, side="right")
        mask[i] = (greater & 1).astype(bool)
    return mask
