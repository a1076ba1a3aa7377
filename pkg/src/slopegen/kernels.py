"""Backend selection for the batched kernels.

The compiled extension is used when it imports; otherwise the numpy
implementation.  ``SLOPEGEN_BACKEND=python`` forces the fallback and
``SLOPEGEN_BACKEND=compiled`` makes a missing extension an error.
"""
from __future__ import annotations

import logging
import os
from types import ModuleType

import numpy as np

from . import _pykernels

log = logging.getLogger(__name__)

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

FUNCTIONS = (
    "qmul",
    "quadratic_forms",
    "sandwich_matrices",
    "matvec",
    "cross",
    "lorentz_defects",
    "slope_terms",
)


def available() -> dict[str, ModuleType]:
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["compiled"] = _ckernels
    return out


def get(name: str | None = None) -> ModuleType:
    """Kernel module by name (``auto``, ``compiled`` or ``python``)."""
    name = name or os.environ.get("SLOPEGEN_BACKEND", "auto")
    if name == "auto":
        return _ckernels if _ckernels is not None else _pykernels
    if name == "python":
        return _pykernels
    if name == "compiled":
        if _ckernels is None:
            raise ImportError("compiled kernels requested but slopegen._ckernels is not built")
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")


backend = get()
log.debug("slopegen kernels: %s", backend.NAME)


def as_rows(a, width: int) -> np.ndarray:
    """C-contiguous float64 ``(n, width)`` view, as the compiled kernels require."""
    arr = np.ascontiguousarray(a, dtype=np.float64)
    if arr.ndim != 2 or arr.shape[1] != width:
        raise ValueError(f"expected shape (n, {width}), got {arr.shape}")
    return arr
