"""Kernel backend selection.

Imports the compiled Cython kernels when they were built, otherwise the
pure-Python fallback.  Set QWATSON_BACKEND=python or QWATSON_BACKEND=compiled
to force a choice (the latter raises if the extension is missing).
"""

from __future__ import annotations

import os

_forced = os.environ.get("QWATSON_BACKEND")

if _forced == "python":
    from qwatson import _kernels_py as kernels

    BACKEND = "python"
elif _forced == "compiled":
    from qwatson import _qkernels as kernels  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from qwatson import _qkernels as kernels  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from qwatson import _kernels_py as kernels

        BACKEND = "python"
