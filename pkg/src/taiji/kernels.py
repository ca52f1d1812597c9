"""Kernel dispatch: the compiled extension when present, numpy otherwise.

Set ``TAIJI_PURE_PYTHON=1`` before import to force the fallback (used by
the benchmark and the parity tests).  Both implementations are
bit-identical, so the choice never changes any output.
"""

from __future__ import annotations

import os

if os.environ.get("TAIJI_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _kernels_py as _impl  # type: ignore[no-redef]

IMPLEMENTATION: str = _impl.IMPLEMENTATION

s_curve_values = _impl.s_curve_values
chord_values = _impl.chord_values
polygon_grid_mask = _impl.polygon_grid_mask
