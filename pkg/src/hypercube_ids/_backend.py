"""Kernel selection: compiled when available, pure Python otherwise.

Set ``HYPERCUBE_IDS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os
from types import ModuleType

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def available() -> dict[str, ModuleType]:
    found = {"python": _pykernels}
    if _ckernels is not None:
        found["cython"] = _ckernels
    return found


def select(name: str | None = None) -> ModuleType:
    if name is None:
        if os.environ.get("HYPERCUBE_IDS_PURE_PYTHON") == "1" or _ckernels is None:
            return _pykernels
        return _ckernels
    try:
        return available()[name]
    except KeyError:
        raise ValueError(f"kernel backend {name!r} is not available") from None


kernels = select()
