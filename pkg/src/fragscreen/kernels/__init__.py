"""Kernel backend selection.

The compiled extension is preferred when importable; the pure backend is the
fallback and can be forced with ``FRAGSCREEN_PURE=1`` (used by the tests and
the backend benchmark).  Both backends are contract-identical.
"""

from __future__ import annotations

import os

if os.environ.get("FRAGSCREEN_PURE") == "1":
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND = _impl.backend_name()
fnv1a_ints = _impl.fnv1a_ints
wl_refine = _impl.wl_refine
tanimoto_words = _impl.tanimoto_words
sims_one_vs_many = _impl.sims_one_vs_many
mean_pairwise_tanimoto = _impl.mean_pairwise_tanimoto
snn_mean = _impl.snn_mean

__all__ = [
    "BACKEND",
    "fnv1a_ints",
    "wl_refine",
    "tanimoto_words",
    "sims_one_vs_many",
    "mean_pairwise_tanimoto",
    "snn_mean",
]
