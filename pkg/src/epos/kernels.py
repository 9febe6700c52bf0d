"""Select the compiled kernels when available, else the pure-Python ones.

Set ``EPOS_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

try:
    if os.environ.get("EPOS_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as _impl
except ImportError:
    _impl = _pykernels

IMPLEMENTATION = _impl.IMPLEMENTATION
canonical_labeling = _impl.canonical_labeling
find_induced = _impl.find_induced
stable_type_counts = _impl.stable_type_counts
