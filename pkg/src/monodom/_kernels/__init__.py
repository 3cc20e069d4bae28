"""Kernel backend selection.

The compiled extension is preferred when importable; the pure-Python
module is the fallback. Set MONODOM_PURE=1 to force the fallback (used
by the benchmark and by CI to exercise both paths).
"""

from __future__ import annotations

import os

from . import py as _py

impl = _py
BACKEND = "pure"

if not os.environ.get("MONODOM_PURE"):
    try:
        from . import _fast as _fast_mod

        impl = _fast_mod
        BACKEND = "compiled"
    except ImportError:
        pass

subset_lcms = impl.subset_lcms
minimal_transversals = impl.minimal_transversals
dominance_masks = impl.dominance_masks
rank_modp = impl.rank_modp


def rank_int(rows):
    # compiled backend works in int64 and signals blowup via OverflowError;
    # the big-int fallback is always exact
    try:
        return impl.rank_int(rows)
    except OverflowError:
        return _py.rank_int(rows)
