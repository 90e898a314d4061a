"""Backend selection for the hot loops.

``SIGNED_SPECTRA_BACKEND=numpy`` forces the pure-numpy path; otherwise the
numba path is used when numba imports cleanly.
"""

import os
from types import ModuleType

from . import numpy_impl

try:
    from . import numba_impl
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_impl = None

ENV_FLAG = "SIGNED_SPECTRA_BACKEND"
BACKENDS = ("numba", "numpy")


def available_backends() -> tuple[str, ...]:
    return BACKENDS if numba_impl is not None else ("numpy",)


def get_backend(name: str | None = None) -> ModuleType:
    """Return the kernel module for ``name`` (default: from the env flag)."""
    if name is None:
        name = os.environ.get(ENV_FLAG, "numba").strip().lower() or "numba"
    if name not in BACKENDS:
        raise ValueError(f"unknown backend {name!r}; expected one of {BACKENDS}")
    if name == "numba" and numba_impl is not None:
        return numba_impl
    return numpy_impl


def backend_name() -> str:
    return "numba" if get_backend() is numba_impl and numba_impl is not None else "numpy"
