"""Hot kernels, compiled when available.

The Cython module ``_core`` is used if it imports; otherwise (or when
``LINRANK_PURE_PYTHON=1``) the pure-Python twin in ``_pure`` is selected.
``BACKEND`` names the active implementation.
"""

from __future__ import annotations

import os

from . import _pure

if os.environ.get("LINRANK_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pure
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _pure
        BACKEND = "python"

rank_rows = _impl.rank_rows
cut_rank_table = _impl.cut_rank_table
prefix_width_table = _impl.prefix_width_table
first_uncentered = _impl.first_uncentered
first_ramsey_refutation = _impl.first_ramsey_refutation

# Mask-based kernels in ``_core`` handle at most this many vertices.
MASK_LIMIT = 64 if BACKEND == "cython" else None

__all__ = [
    "BACKEND",
    "rank_rows",
    "cut_rank_table",
    "prefix_width_table",
    "first_uncentered",
    "first_ramsey_refutation",
]
