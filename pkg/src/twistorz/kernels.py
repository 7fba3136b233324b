"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set ``TWISTORZ_PURE=1`` to force the pure-numpy implementations (used by
the benchmark and by backend-consistency tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("TWISTORZ_PURE"):
    _impl = _kernels_py
    BACKEND = "pure"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:  # extension not built
        _impl = _kernels_py
        BACKEND = "pure"

nijenhuis_components = _impl.nijenhuis_components
nijenhuis_norm_sq = _impl.nijenhuis_norm_sq
conjugated_norm_sq = _impl.conjugated_norm_sq
