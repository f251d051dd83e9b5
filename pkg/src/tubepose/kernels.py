"""Backend selection for the cylinder-residual kernels.

Prefers the compiled extension; falls back to the NumPy implementation
when the extension is missing or TUBEPOSE_PURE_PYTHON=1 is set. Both
backends share one contract, so callers import from here only.
"""

from __future__ import annotations

import os

if os.environ.get("TUBEPOSE_PURE_PYTHON", "").strip() not in ("", "0"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND: str = _impl.BACKEND
residual_grid = _impl.residual_grid
residual_at = _impl.residual_at
