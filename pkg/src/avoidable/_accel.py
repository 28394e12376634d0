"""Optional numba acceleration.

Set ``AVOIDABLE_NO_NUMBA=1`` to run every kernel as plain Python over numpy
arrays. The kernels are written so both paths execute the same source.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("AVOIDABLE_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by AVOIDABLE_NO_NUMBA")
    from numba import njit as _njit

    NUMBA_ENABLED = True
except ImportError:
    _njit = None
    NUMBA_ENABLED = False


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise an identity decorator."""
    if NUMBA_ENABLED:
        kwargs.setdefault("cache", True)
        return _njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]

    def wrap(func):
        return func

    return wrap
