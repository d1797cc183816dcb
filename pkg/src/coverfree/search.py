"""Exhaustive search for the maximum cover-free code size at tiny lengths.

Depth-first over distinct nonzero columns in decreasing integer order (any
column set has exactly one decreasing ordering, so each set is visited once)
with incremental feasibility: adding a column only requires checking the
pairs that involve it.  A branch is cut when even taking every remaining
candidate cannot beat the incumbent.
"""
from __future__ import annotations

from itertools import combinations

from .codes import BinaryCode

__all__ = ["exhaustive_max_t"]

# Feasibility guards: the search tree is the family of all cover-free column
# sets, which explodes with N; (1,1) on 6 rows already has ~7.8e6 antichains.
_MAX_N_GENERAL = 6
_MAX_N_ANTICHAIN = 5


def _addition_ok(cols: list[int], c: int, s: int, l: int) -> bool:
    """Whether appending column c keeps the set cover-free, checking only
    the (S, L) pairs that contain c."""
    t = len(cols) + 1
    if t < s + l:
        return True
    allc = cols + [c]
    ci = t - 1
    others = range(t - 1)
    # c on the covered (L) side
    for lrest in combinations(others, l - 1):
        inter = allc[ci]
        for i in lrest:
            inter &= allc[i]
        in_l = set(lrest)
        rest = [i for i in others if i not in in_l]
        for sset in combinations(rest, s):
            union = 0
            for i in sset:
                union |= allc[i]
            if inter & ~union == 0:
                return False
    # c on the covering (S) side
    for srest in combinations(others, s - 1):
        in_s = set(srest)
        rest = [i for i in others if i not in in_s]
        for lset in combinations(rest, l):
            inter = allc[lset[0]]
            for i in lset[1:]:
                inter &= allc[i]
            union = allc[ci]
            for i in srest:
                union |= allc[i]
            if inter & ~union == 0:
                return False
    return True


def exhaustive_max_t(
    N: int, s: int, l: int, t_cap: int | None = None
) -> tuple[int, BinaryCode]:
    """Exact maximum cover-free code size for length N, with a witness code.

    Guards: N <= 5 for (s, l) == (1, 1), N <= 6 otherwise; ``t_cap`` limits
    the search depth (defaults to all 2**N - 1 nonzero columns).
    """
    if s < 1 or l < 1:
        raise ValueError("s and l must be >= 1")
    limit = _MAX_N_ANTICHAIN if (s, l) == (1, 1) else _MAX_N_GENERAL
    if not 1 <= N <= limit:
        raise ValueError(f"N={N} outside the feasible range 1..{limit} for (s,l)=({s},{l})")
    n_candidates = (1 << N) - 1
    if t_cap is None:
        t_cap = n_candidates
    candidates = list(range(n_candidates, 0, -1))
    best_size = 0
    best_cols: list[int] = []

    def dfs(chosen: list[int], start: int) -> None:
        nonlocal best_size, best_cols
        if len(chosen) > best_size:
            best_size = len(chosen)
            best_cols = list(chosen)
        if len(chosen) >= t_cap:
            return
        for k in range(start, n_candidates):
            if len(chosen) + (n_candidates - k) <= best_size:
                break
            c = candidates[k]
            if _addition_ok(chosen, c, s, l):
                chosen.append(c)
                dfs(chosen, k + 1)
                chosen.pop()

    dfs([], 0)
    return best_size, BinaryCode.from_masks(N, best_cols)
