"""Kernel backend selection.

The compiled extension (patex._corec) is preferred when it built; the
pure-Python twin (patex._corepy) is the drop-in fallback.  Set PATEX_PURE=1
to force the pure backend — the parity tests and the benchmark use this.
"""

import os

if os.environ.get("PATEX_PURE"):
    from patex import _corepy as kernels
else:
    try:
        from patex import _corec as kernels  # type: ignore[no-redef]
    except ImportError:
        from patex import _corepy as kernels


def backend_name() -> str:
    """Name of the active kernel backend: "cython" or "python"."""
    return kernels.BACKEND
