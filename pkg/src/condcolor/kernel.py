"""Search-backend selection: compiled extension if built, pure Python otherwise.

Set CONDCOLOR_KERNEL=python (or =compiled) to force a backend at import time;
individual calls can also pass backend="python"/"compiled" explicitly, which
is how the benchmark compares the two.
"""

from __future__ import annotations

import os
from array import array

from . import _kernel_py

try:
    from . import _kernel_c
except ImportError:  # extension not built; fall back silently
    _kernel_c = None

MODE_FIRST = _kernel_py.MODE_FIRST
MODE_ENUM = _kernel_py.MODE_ENUM
STATUS_DONE = _kernel_py.STATUS_DONE
STATUS_TIMEOUT = _kernel_py.STATUS_TIMEOUT

_ENV_CHOICE = os.environ.get("CONDCOLOR_KERNEL", "").strip().lower() or None


def available_backends() -> tuple[str, ...]:
    return ("compiled", "python") if _kernel_c is not None else ("python",)


def default_backend() -> str:
    if _ENV_CHOICE in ("python", "compiled"):
        if _ENV_CHOICE == "compiled" and _kernel_c is None:
            raise RuntimeError("CONDCOLOR_KERNEL=compiled but the extension is not built")
        return _ENV_CHOICE
    return "compiled" if _kernel_c is not None else "python"


def run_search(n, indptr, nbrs, order, mins, k, mode, cap, deadline, backend=None):
    """Dispatch to the selected kernel; see _kernel_py.run_search for the contract."""
    choice = backend or default_backend()
    if choice == "python":
        return _kernel_py.run_search(n, indptr, nbrs, order, mins, k, mode, cap, deadline)
    if choice == "compiled":
        if _kernel_c is None:
            raise RuntimeError("compiled kernel requested but the extension is not built")
        return _kernel_c.run_search(
            n,
            array("i", indptr),
            array("i", nbrs),
            array("i", order),
            array("i", mins),
            k,
            mode,
            cap,
            deadline,
        )
    raise ValueError(f"unknown backend {choice!r}; use 'compiled' or 'python'")
