"""Kernel backend selection.

The hot loop (adaptive RK marching of the oscillator system along complex
polylines) exists twice: a Cython extension ``_kernel_cy`` and a pure-Python
fallback ``_kernel_py``.  The compiled one is preferred; set the environment
variable ``TRIPLECHAR_FORCE_PYTHON=1`` to force the fallback (used by the
benchmark and by CI on platforms without a C compiler).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("TRIPLECHAR_FORCE_PYTHON", "").strip() not in ("", "0"):
    kernel = _kernel_py
else:
    try:
        from . import _kernel_cy as kernel  # type: ignore[no-redef]
    except ImportError:
        kernel = _kernel_py

integrate_polyline = kernel.integrate_polyline
BACKEND_NAME = kernel.BACKEND_NAME

OK = _kernel_py.OK
STEP_UNDERFLOW = _kernel_py.STEP_UNDERFLOW
NON_FINITE = _kernel_py.NON_FINITE
