"""Backend selection for the hot kernels.

The compiled extension is used when it was built and imports cleanly;
otherwise the pure-Python kernels are used. Setting ``OVERQ_PURE_PYTHON=1``
forces the fallback.
"""

from __future__ import annotations

import os

from overq import _pykernels

BACKEND = "python"

if os.environ.get("OVERQ_PURE_PYTHON", "").strip() not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from overq import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels

mul_trunc = _impl.mul_trunc
inv_trunc = _impl.inv_trunc
gap_counts = _impl.gap_counts
congruence_counts = _impl.congruence_counts
regular4_counts = _impl.regular4_counts

__all__ = [
    "BACKEND",
    "mul_trunc",
    "inv_trunc",
    "gap_counts",
    "congruence_counts",
    "regular4_counts",
]
