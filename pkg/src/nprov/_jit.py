"""Numba switch.

Set ``NPROV_DISABLE_JIT=1`` to run the pure-numpy kernels instead of the
compiled ones (also used automatically when numba is not importable).
"""

import os

JIT_REQUESTED = os.environ.get("NPROV_DISABLE_JIT", "").lower() not in ("1", "true", "yes")

try:
    from numba import njit
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover
    NUMBA_AVAILABLE = False

    def njit(func=None, **kwargs):
        if func is not None:
            return func
        return lambda f: f

JIT_ENABLED = JIT_REQUESTED and NUMBA_AVAILABLE
