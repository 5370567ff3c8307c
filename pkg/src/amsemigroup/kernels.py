"""Backend selection for the membership DP.

The compiled extension is used when it imports; otherwise, or when the
``AMSEMIGROUP_PURE_PYTHON`` environment variable is non-empty, the
pure-Python implementation is used.  Both expose ``fill_table`` and
``scan_conductor`` with identical results.
"""
from __future__ import annotations

import os

from . import _kernels_py as python_backend

compiled_backend = None
if not os.environ.get("AMSEMIGROUP_PURE_PYTHON"):
    try:
        from . import _kernels as compiled_backend
    except ImportError:
        compiled_backend = None

_active = compiled_backend if compiled_backend is not None else python_backend

BACKEND = "cython" if compiled_backend is not None else "python"

fill_table = _active.fill_table
scan_conductor = _active.scan_conductor

__all__ = ["BACKEND", "compiled_backend", "fill_table", "python_backend", "scan_conductor"]
