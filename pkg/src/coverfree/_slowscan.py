"""Pure-Python subset-scan kernels over integer bitmasks.

Reference implementations for the compiled module in ``_fastscan.pyx``; the
two must enumerate in the same (lexicographic) order so that first-witness
results agree bit for bit.  This path accepts arbitrary-precision masks and
therefore codes of any length.
"""
from __future__ import annotations

from itertools import combinations
from typing import Optional, Sequence

__all__ = ["cf_find_bad", "cf_purge", "ld_find_bad", "covered_columns"]


def cf_find_bad(
    masks: Sequence[int], s: int, l: int
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """First (S, L) pair violating the cover-free condition, else None.

    A pair is bad when no row is 1 on all of L and 0 on all of S, i.e. the
    intersection of the L supports is contained in the union of the S
    supports.
    """
    t = len(masks)
    for lset in combinations(range(t), l):
        inter = masks[lset[0]]
        for i in lset[1:]:
            inter &= masks[i]
        in_l = set(lset)
        rest = [i for i in range(t) if i not in in_l]
        for sset in combinations(rest, s):
            union = 0
            for i in sset:
                union |= masks[i]
            if inter & ~union == 0:
                return sset, lset
    return None


def cf_purge(masks: Sequence[int], s: int, l: int) -> list[int]:
    """One purge pass: delete the lowest L-side column of each live bad pair.

    Goodness of a pair depends only on its own columns, so a single pass that
    skips pairs with deleted members leaves no bad pair among the survivors.
    Returns the deleted indices in deletion order.
    """
    t = len(masks)
    alive = [True] * t
    deleted: list[int] = []
    for lset in combinations(range(t), l):
        if not all(alive[i] for i in lset):
            continue
        inter = masks[lset[0]]
        for i in lset[1:]:
            inter &= masks[i]
        in_l = set(lset)
        rest = [i for i in range(t) if alive[i] and i not in in_l]
        if len(rest) < s:
            continue
        for sset in combinations(rest, s):
            union = 0
            for i in sset:
                union |= masks[i]
            if inter & ~union == 0:
                alive[lset[0]] = False
                deleted.append(lset[0])
                break
    return deleted


def ld_find_bad(
    masks: Sequence[int], s: int, big_l: int
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """First s-set whose union covers >= big_l outside columns, with all the
    covered outsiders; None when the code is list-decoding valid."""
    t = len(masks)
    for sset in combinations(range(t), s):
        union = 0
        for i in sset:
            union |= masks[i]
        in_s = set(sset)
        covered = [j for j in range(t) if j not in in_s and masks[j] & ~union == 0]
        if len(covered) >= big_l:
            return sset, tuple(covered)
    return None


def covered_columns(masks: Sequence[int], n_pick: int) -> list[int]:
    """Indices of columns covered by a union of exactly ``n_pick`` others.

    Only columns overlapping the target can contribute to a cover, so the
    subset scan runs over those; missing slots are padded by arbitrary other
    columns, which requires t - 1 >= n_pick.
    """
    t = len(masks)
    if t - 1 < n_pick:
        return []
    out = []
    for j in range(t):
        target = masks[j]
        if target == 0:
            out.append(j)
            continue
        cand = [k for k in range(t) if k != j and masks[k] & target]
        full = 0
        for k in cand:
            full |= masks[k]
        if target & ~full:
            continue
        size = min(n_pick, len(cand))
        for sub in combinations(cand, size):
            union = 0
            for k in sub:
                union |= masks[k]
            if target & ~union == 0:
                out.append(j)
                break
    return out
