"""Verification of the three code properties, with counterexample witnesses.

Every ``False`` verdict comes with a :class:`~coverfree.codes.Witness` that
:func:`recheck` can replay against the code to reproduce the violation.
"""
from __future__ import annotations

from itertools import chain, combinations

from . import scan
from .codes import BinaryCode, Witness

__all__ = ["is_cover_free", "is_list_decoding", "is_plan", "bad_columns", "recheck"]


def _union(masks: tuple[int, ...], idx) -> int:
    u = 0
    for i in idx:
        u |= masks[i]
    return u


def _inter(masks: tuple[int, ...], idx) -> int:
    it = iter(idx)
    v = masks[next(it)]
    for i in it:
        v &= masks[i]
    return v


def is_cover_free(code: BinaryCode, s: int, l: int) -> tuple[bool, Witness | None]:
    """Whether every disjoint (S, L) with |S|=s, |L|=l has a separating row
    (zeros on S, ones on L).  Scans all C(t,l)*C(t-l,s) pairs, first witness
    wins."""
    if s < 1 or l < 1:
        raise ValueError("s and l must be >= 1")
    if s + l > code.n_cols:
        raise ValueError(f"s + l = {s + l} exceeds the number of columns {code.n_cols}")
    hit = scan.cf_find_bad(code.masks, code.n_rows, s, l)
    if hit is None:
        return True, None
    sset, lset = hit
    return False, Witness(
        kind="cover_free",
        set_s=tuple(sset),
        set_l=tuple(lset),
        detail={
            "s": s,
            "l": l,
            "reason": "no row is 1 on every set_l column and 0 on every set_s column",
        },
    )


def is_list_decoding(code: BinaryCode, s: int, L: int) -> tuple[bool, Witness | None]:
    """Whether the union of every s columns covers at most L-1 outsiders."""
    if not 1 <= s < code.n_cols:
        raise ValueError("need 1 <= s < number of columns")
    if L < 1:
        raise ValueError("L must be >= 1")
    hit = scan.ld_find_bad(code.masks, code.n_rows, s, L)
    if hit is None:
        return True, None
    sset, covered = hit
    return False, Witness(
        kind="list_decoding",
        set_s=tuple(sset),
        set_l=tuple(covered),
        detail={
            "s": s,
            "L": L,
            "reason": f"the union of set_s covers {len(covered)} >= L outside columns",
        },
    )


def _plan_subsets(t: int, s: int, mode: str):
    if mode == "exact":
        return combinations(range(t), s)
    if mode == "at_most":
        return chain.from_iterable(combinations(range(t), k) for k in range(1, s + 1))
    raise ValueError(f"unknown plan mode {mode!r}")


def is_plan(code: BinaryCode, s: int, mode: str = "exact") -> tuple[bool, Witness | None]:
    """Whether all unions of exactly-s (or up-to-s) column sets are distinct.

    Union bitmasks are hashed; a repeated mask is confirmed by re-computing
    both unions before it is reported.  The two offending subsets may share
    columns.
    """
    if mode == "exact":
        if not 1 <= s < code.n_cols:
            raise ValueError("need 1 <= s < number of columns for exact mode")
    elif not 1 <= s:
        raise ValueError("s must be >= 1")
    masks = code.masks
    seen: dict[int, tuple[int, ...]] = {}
    for subset in _plan_subsets(code.n_cols, s, mode):
        u = _union(masks, subset)
        prev = seen.get(u)
        if prev is not None and prev != subset:
            assert _union(masks, prev) == u
            return False, Witness(
                kind=f"plan_{mode}",
                set_s=prev,
                set_l=subset,
                detail={"s": s, "mode": mode, "union_weight": u.bit_count()},
            )
        if prev is None:
            seen[u] = subset
    return True, None


def bad_columns(code: BinaryCode, s: int, L: int) -> frozenset[int]:
    """Columns covered by a union of floor(s/L) other columns.

    For a valid list-decoding code with s > L >= 2 there are at most L-1 of
    them, and the remaining columns form a disjunctive floor(s/L)-code.
    """
    if not s > L >= 2:
        raise ValueError("defined for s > L >= 2")
    return frozenset(scan.covered_columns(code.masks, code.n_rows, s // L))


def recheck(code: BinaryCode, witness: Witness) -> bool:
    """Replay a witness against a code; True when the violation reproduces."""
    masks = code.masks
    if witness.kind == "cover_free":
        return _inter(masks, witness.set_l) & ~_union(masks, witness.set_s) == 0
    if witness.kind == "list_decoding":
        union = _union(masks, witness.set_s)
        if len(witness.set_l) < witness.detail["L"]:
            return False
        return all(masks[j] & ~union == 0 for j in witness.set_l)
    if witness.kind in ("plan_exact", "plan_at_most"):
        return (
            witness.set_s != witness.set_l
            and _union(masks, witness.set_s) == _union(masks, witness.set_l)
        )
    raise ValueError(f"unknown witness kind {witness.kind!r}")
