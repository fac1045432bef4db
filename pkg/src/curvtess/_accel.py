"""Numba switch.

Set ``CURVTESS_DISABLE_NUMBA=1`` to force the pure-numpy kernels. When numba
is missing the numpy kernels are used silently.
"""
import os

_disabled = os.environ.get("CURVTESS_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    import numba as _nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    _nb = None

HAS_NUMBA = _nb is not None
USE_NUMBA = HAS_NUMBA and not _disabled


def njit(fn):
    """Compile ``fn`` with numba when available, otherwise return it unchanged."""
    if _nb is None:
        return fn
    return _nb.njit(cache=True, nogil=True)(fn)
