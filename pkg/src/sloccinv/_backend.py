"""Kernel backend selection.

The compiled extension is preferred when built; the numpy kernels are the
fallback.  Set SLOCCINV_BACKEND=python (or =compiled) before import to force
one side, e.g. for the backend-parity tests and the benchmark.
"""

import os

from . import _kernels_py

_requested = os.environ.get("SLOCCINV_BACKEND", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _core as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"
elif _requested in ("compiled", "c", "ext"):
    from . import _core as _impl
    BACKEND = "compiled"
elif _requested in ("python", "py", "pure"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    raise ValueError(
        f"SLOCCINV_BACKEND={_requested!r} not recognized; use 'auto', 'compiled' or 'python'"
    )

coeff_matrix = _impl.coeff_matrix
build_fmatrix = _impl.build_fmatrix
charpoly_coeffs = _impl.charpoly_coeffs
apply_local_ops = _impl.apply_local_ops
det_lu = _impl.det_lu
