"""Pick the clique kernel at import time.

The compiled ``_ckernel`` is used when it was built; otherwise, or when
``RAMSEYCERT_BACKEND=python`` is set, the pure-Python ``_pykernel``.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernel


def load(name: str | None = None) -> ModuleType:
    """Return the kernel module for ``name`` ("cython" or "python"), or the default."""
    if name is None:
        name = os.environ.get("RAMSEYCERT_BACKEND", "auto")
    if name == "python":
        return _pykernel
    try:
        from . import _ckernel
    except ImportError:
        if name == "cython":
            raise
        return _pykernel
    return _ckernel


kernel = load()
BACKEND: str = kernel.BACKEND
