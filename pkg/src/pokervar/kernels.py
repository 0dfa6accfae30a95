"""Hot kernels, taken from the compiled extension when it is importable.

Set ``POKERVAR_PURE_PYTHON=1`` to force the numpy fallback.
"""

from __future__ import annotations

import importlib
import os
from types import ModuleType

__all__ = [
    "BACKEND",
    "load_backend",
    "available_backends",
    "eval7",
    "showdown_codes",
    "category5",
    "canonical_keys",
    "subset_sums",
    "hold_sums",
]

_MODULES = {"cython": "pokervar._core", "python": "pokervar._pycore"}


def load_backend(name: str) -> ModuleType:
    if name not in _MODULES:
        raise ValueError(f"unknown backend {name!r}")
    return importlib.import_module(_MODULES[name])


def available_backends() -> list[str]:
    names = []
    for name in _MODULES:
        try:
            load_backend(name)
        except ImportError:
            continue
        names.append(name)
    return names


def _select() -> tuple[str, ModuleType]:
    if not os.environ.get("POKERVAR_PURE_PYTHON"):
        try:
            return "cython", load_backend("cython")
        except ImportError:
            pass
    return "python", load_backend("python")


BACKEND, _impl = _select()

eval7 = _impl.eval7
showdown_codes = _impl.showdown_codes
category5 = _impl.category5
canonical_keys = _impl.canonical_keys
subset_sums = _impl.subset_sums
hold_sums = _impl.hold_sums
