"""Kernel backend selection.

The compiled extension is used when it was built; otherwise the pure-Python
kernels are used. Setting ``SUPERCATALAN_PURE_PYTHON=1`` forces the fallback.
"""

import os

if os.environ.get("SUPERCATALAN_PURE_PYTHON", "") not in ("", "0"):
    from . import _kernels_py as kernels
    BACKEND = "python"
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels
        BACKEND = "python"

__all__ = ["kernels", "BACKEND"]
