"""Backend selection for the subset-scan kernels.

The compiled extension handles codes with at most 64 rows (uint64 bitmask
fast path); longer codes, or COVERFREE_PURE=1 in the environment, fall back
to the pure-Python twin with arbitrary-precision masks.  Both backends
enumerate in the same order and return identical results.
"""
from __future__ import annotations

import os
from typing import Optional, Sequence

from . import _slowscan

try:  # pragma: no cover - exercised only when the extension is absent
    from . import _fastscan

    HAVE_FASTSCAN = True
except ImportError:  # pragma: no cover
    _fastscan = None
    HAVE_FASTSCAN = False

FORCE_PURE = os.environ.get("COVERFREE_PURE") == "1"

PairOrNone = Optional[tuple[tuple[int, ...], tuple[int, ...]]]


def backend_name(n_rows: int) -> str:
    if HAVE_FASTSCAN and not FORCE_PURE and n_rows <= 64:
        return "compiled"
    return "pure"


def _impl(n_rows: int):
    return _fastscan if backend_name(n_rows) == "compiled" else _slowscan


def cf_find_bad(masks: Sequence[int], n_rows: int, s: int, l: int) -> PairOrNone:
    return _impl(n_rows).cf_find_bad(list(masks), s, l)


def cf_purge(masks: Sequence[int], n_rows: int, s: int, l: int) -> list[int]:
    return list(_impl(n_rows).cf_purge(list(masks), s, l))


def ld_find_bad(masks: Sequence[int], n_rows: int, s: int, big_l: int) -> PairOrNone:
    return _impl(n_rows).ld_find_bad(list(masks), s, big_l)


def covered_columns(masks: Sequence[int], n_rows: int, n_pick: int) -> list[int]:
    return list(_impl(n_rows).covered_columns(list(masks), n_pick))
