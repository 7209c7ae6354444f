"""Kernel backend selection.

The compiled Cython module is used when it imported cleanly; otherwise the
pure-Python reference implementation takes over with identical semantics
(just slower).  Set HAMLAB_PURE=1 to force the fallback, e.g. for timing
comparisons or when debugging the kernels themselves.
"""

import os

from . import _pure

if os.environ.get("HAMLAB_PURE", "") not in ("", "0"):
    _impl = _pure
    BACKEND = "pure"
else:
    try:
        from . import _core as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pure
        BACKEND = "pure"

rotation_closure = _impl.rotation_closure
ham_dp = _impl.ham_dp

__all__ = ["rotation_closure", "ham_dp", "BACKEND"]
