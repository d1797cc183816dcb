"""The constant-weight random ensemble and the purge construction.

Randomness is PCG64 throughout.  Column j of a generated code is drawn from
its own stream ``PCG64(SeedSequence(seed, spawn_key=(j,)))`` (first w entries
of a permutation of the rows), so generation is bit-reproducible and columns
can be drawn in parallel without changing the result.
"""
from __future__ import annotations

import numpy as np

from . import scan
from .codes import BinaryCode
from .verify import is_cover_free

__all__ = ["random_constant_weight", "purge_construction", "DegenerateCodeError"]


class DegenerateCodeError(RuntimeError):
    """Purging left fewer columns than the property quantifies over."""


def _column_weight(N: int, Q: float) -> int:
    w = int(Q * N)
    if not 1 <= w < N:
        raise ValueError(f"floor(Q*N) = {w} outside [1, N-1] for N={N}, Q={Q}")
    return w


def random_constant_weight(N: int, t: int, Q: float, seed: int) -> BinaryCode:
    """t columns drawn i.i.d. uniform from the weight-floor(Q*N) columns."""
    if N < 1 or t < 1:
        raise ValueError("N and t must be >= 1")
    w = _column_weight(N, Q)
    cols = []
    for j in range(t):
        rng = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(entropy=seed, spawn_key=(j,)))
        )
        cols.append(rng.permutation(N)[:w].tolist())
    return BinaryCode.from_columns(N, cols)


def purge_construction(
    N: int, s: int, l: int, Q: float, t_target: int, seed: int
) -> BinaryCode:
    """Draw t_target ensemble columns and purge the cover-free violations.

    Each bad (S, L) pair found loses the lowest-index column of its L side;
    one pass suffices because a pair's goodness depends only on its own
    columns.  The survivors are certified by :func:`is_cover_free` before
    being returned.
    """
    if s < 1 or l < 1:
        raise ValueError("s and l must be >= 1")
    if s + l > t_target:
        raise ValueError("t_target must be at least s + l")
    code = random_constant_weight(N, t_target, Q, seed)
    deleted = set(scan.cf_purge(code.masks, N, s, l))
    survivors = [code.columns[j] for j in range(t_target) if j not in deleted]
    if len(survivors) < s + l:
        raise DegenerateCodeError(
            f"only {len(survivors)} columns survived purging; need >= {s + l}"
        )
    purged = BinaryCode(N, tuple(survivors))
    ok, witness = is_cover_free(purged, s, l)
    if not ok:  # pragma: no cover - would indicate a kernel bug
        raise AssertionError(f"purged code failed certification: {witness!r}")
    return purged
