"""Backend selection for the Z_p elimination kernels.

The compiled extension is used when it was built; otherwise the numpy
fallback.  Set ``INTERVALBASIS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("INTERVALBASIS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

rref_mod_p = _impl.rref_mod_p
reduce_columns_mod_p = _impl.reduce_columns_mod_p
extend_basis_mod_p = _impl.extend_basis_mod_p

__all__ = ["BACKEND", "rref_mod_p", "reduce_columns_mod_p", "extend_basis_mod_p"]
