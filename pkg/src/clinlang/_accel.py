"""Backend selection for the numeric kernels.

Hot frame loops (RMS energy, per-frame normalized autocorrelation) run
through numba's @njit by default.  Set OBAI_DISABLE_NUMBA=1 to force the
pure-numpy fallback; both backends produce identical float64 results.
"""

from __future__ import annotations

import os

USE_NUMBA = os.environ.get("OBAI_DISABLE_NUMBA", "").lower() not in (
    "1",
    "true",
    "yes",
)

if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False

if not USE_NUMBA:

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap
