"""Numba/numpy backend selection for the hot kernels.

Set the environment variable ``QQMEMS_NO_NUMBA=1`` before import to run the
pure-numpy fallback path (useful for debugging and for the benchmark in
``benchmarks/bench_kernels.py``).
"""

import os

NUMBA_ENABLED = os.environ.get("QQMEMS_NO_NUMBA", "0").lower() not in ("1", "true", "yes")

if NUMBA_ENABLED:
    try:
        from numba import njit as _njit
    except ImportError:  # pragma: no cover
        NUMBA_ENABLED = False

if NUMBA_ENABLED:
    def maybe_njit(func):
        return _njit(cache=True)(func)
else:
    def maybe_njit(func):
        return func
