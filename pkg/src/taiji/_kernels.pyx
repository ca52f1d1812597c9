# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: bulk curve evaluation and grid rasterization.

Twin of :mod:`taiji._kernels_py`.  The arithmetic mirrors the numpy
fallback operation for operation, and setup.py compiles this extension
with ``-ffp-contract=off``, so both implementations return bit-identical
arrays.
"""

from libc.math cimport sqrt

import numpy as np

IMPLEMENTATION = "c"


def s_curve_values(xs):
    """Curve ordinates 1/2 + (1 - 2x)*sqrt(1/4 - (x - 1/2)**2) for an array."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    out_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t i
    cdef double t, r
    for i in range(n):
        t = x[i] - 0.5
        r = 0.25 - t * t
        if r < 0.0:
            r = 0.0
        out[i] = 0.5 + (1.0 - 2.0 * x[i]) * sqrt(r)
    return out_arr


def chord_values(xs):
    """Lower and upper circle ordinates for an array of abscissas."""
    cdef double[::1] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef Py_ssize_t n = x.shape[0]
    lo_arr = np.empty(n, dtype=np.float64)
    hi_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] lo = lo_arr
    cdef double[::1] hi = hi_arr
    cdef Py_ssize_t i
    cdef double t, r, half
    for i in range(n):
        t = x[i] - 0.5
        r = 0.25 - t * t
        if r < 0.0:
            r = 0.0
        half = sqrt(r)
        lo[i] = 0.5 - half
        hi[i] = 0.5 + half
    return lo_arr, hi_arr


def polygon_grid_mask(poly_x, poly_y, grid_x, grid_y):
    """Even-odd membership mask of a polygon on a tensor grid.

    Returns a boolean array of shape ``(len(grid_y), len(grid_x))`` where
    ``mask[i, j]`` tells whether ``(grid_x[j], grid_y[i])`` lies inside the
    closed polygon.  Horizontal-ray crossing parity with the half-open rule
    ``(y1 > y) != (y2 > y)``; points exactly on an edge are unspecified.
    """
    cdef double[::1] px = np.ascontiguousarray(poly_x, dtype=np.float64)
    cdef double[::1] py = np.ascontiguousarray(poly_y, dtype=np.float64)
    cdef double[::1] gx = np.ascontiguousarray(grid_x, dtype=np.float64)
    cdef double[::1] gy = np.ascontiguousarray(grid_y, dtype=np.float64)
    cdef Py_ssize_t nv = px.shape[0]
    cdef Py_ssize_t nx = gx.shape[0]
    cdef Py_ssize_t ny = gy.shape[0]
    mask_arr = np.zeros((ny, nx), dtype=np.uint8)
    cdef unsigned char[:, ::1] mask = mask_arr
    cross_arr = np.empty(nv, dtype=np.float64)
    cdef double[::1] cross = cross_arr
    cdef Py_ssize_t i, j, k, e, ncross
    cdef double y, ex1, ey1, ex2, ey2
    cdef int count
    for i in range(ny):
        y = gy[i]
        ncross = 0
        for e in range(nv):
            ex1 = px[e]
            ey1 = py[e]
            if e + 1 == nv:
                ex2 = px[0]
                ey2 = py[0]
            else:
                ex2 = px[e + 1]
                ey2 = py[e + 1]
            if (ey1 > y) != (ey2 > y):
                cross[ncross] = (ex2 - ex1) * (y - ey1) / (ey2 - ey1) + ex1
                ncross += 1
        if ncross == 0:
            continue
        for j in range(nx):
            count = 0
            for k in range(ncross):
                if gx[j] < cross[k]:
                    count += 1
            mask[i, j] = count & 1
    return mask_arr.view(np.bool_)
