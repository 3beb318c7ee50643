"""Hot inner loops, compiled when available.

The Cython module ``_fast`` is used if it imports; otherwise the pure-Python
``_pure`` twin. Setting ``SYNCHROKIT_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pure

try:
    if os.environ.get("SYNCHROKIT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels requested")
    from . import _fast as _impl
except ImportError:
    _impl = _pure

BACKEND = _impl.BACKEND

closure = _impl.closure
regular_flags = _impl.regular_flags
collapsible = _impl.collapsible
shortest_reset = _impl.shortest_reset
min_image_size = _impl.min_image_size
conjugacy_reps = _impl.conjugacy_reps


def available_backends():
    """Map of backend name to kernel module, for tests and benchmarks."""
    out = {"python": _pure}
    try:
        from . import _fast
        out["cython"] = _fast
    except ImportError:
        pass
    return out
