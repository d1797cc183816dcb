# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled subset-scan kernels over uint64 bitmasks (codes with <= 64 rows).

Mirrors ``_slowscan`` exactly, including lexicographic enumeration order, so
first-witness results agree bit for bit between the two backends.
"""
from libc.stdint cimport uint64_t

import numpy as np


cdef inline bint _next_comb(int[::1] idx, int k, int n) noexcept:
    cdef int i = k - 1
    cdef int j
    while i >= 0 and idx[i] == n - k + i:
        i -= 1
    if i < 0:
        return False
    idx[i] += 1
    for j in range(i + 1, k):
        idx[j] = idx[j - 1] + 1
    return True


cdef inline void _reset_comb(int[::1] idx, int k) noexcept:
    cdef int i
    for i in range(k):
        idx[i] = i


def cf_find_bad(masks, int s, int l):
    cdef uint64_t[::1] m = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef int t = m.shape[0]
    cdef int n_rest = t - l
    if n_rest < s:
        return None
    cdef int[::1] lidx = np.zeros(l, dtype=np.intc)
    cdef int[::1] sidx = np.zeros(s, dtype=np.intc)
    cdef int[::1] rest = np.zeros(t, dtype=np.intc)
    cdef uint64_t inter, union_
    cdef int i, j, pos
    _reset_comb(lidx, l)
    while True:
        inter = m[lidx[0]]
        for i in range(1, l):
            inter &= m[lidx[i]]
        pos = 0
        j = 0
        for i in range(t):
            if j < l and lidx[j] == i:
                j += 1
                continue
            rest[pos] = i
            pos += 1
        _reset_comb(sidx, s)
        while True:
            union_ = 0
            for i in range(s):
                union_ |= m[rest[sidx[i]]]
            if inter & ~union_ == 0:
                return (
                    tuple(rest[sidx[i]] for i in range(s)),
                    tuple(lidx[i] for i in range(l)),
                )
            if not _next_comb(sidx, s, n_rest):
                break
        if not _next_comb(lidx, l, t):
            break
    return None


def cf_purge(masks, int s, int l):
    cdef uint64_t[::1] m = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef int t = m.shape[0]
    cdef unsigned char[::1] alive = np.ones(t, dtype=np.uint8)
    cdef int[::1] lidx = np.zeros(l, dtype=np.intc)
    cdef int[::1] sidx = np.zeros(s, dtype=np.intc)
    cdef int[::1] rest = np.zeros(t, dtype=np.intc)
    deleted = []
    cdef uint64_t inter, union_
    cdef int i, j, pos, n_rest
    cdef bint ok, bad
    if t < l:
        return deleted
    _reset_comb(lidx, l)
    while True:
        ok = True
        for i in range(l):
            if not alive[lidx[i]]:
                ok = False
                break
        if ok:
            inter = m[lidx[0]]
            for i in range(1, l):
                inter &= m[lidx[i]]
            pos = 0
            j = 0
            for i in range(t):
                if j < l and lidx[j] == i:
                    j += 1
                    continue
                if alive[i]:
                    rest[pos] = i
                    pos += 1
            n_rest = pos
            if n_rest >= s:
                bad = False
                _reset_comb(sidx, s)
                while True:
                    union_ = 0
                    for i in range(s):
                        union_ |= m[rest[sidx[i]]]
                    if inter & ~union_ == 0:
                        bad = True
                        break
                    if not _next_comb(sidx, s, n_rest):
                        break
                if bad:
                    alive[lidx[0]] = 0
                    deleted.append(lidx[0])
        if not _next_comb(lidx, l, t):
            break
    return deleted


def ld_find_bad(masks, int s, int big_l):
    cdef uint64_t[::1] m = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef int t = m.shape[0]
    if s > t:
        return None
    cdef int[::1] sidx = np.zeros(s, dtype=np.intc)
    cdef uint64_t union_
    cdef int i, j
    cdef bint skip
    _reset_comb(sidx, s)
    while True:
        union_ = 0
        for i in range(s):
            union_ |= m[sidx[i]]
        covered = []
        for j in range(t):
            skip = False
            for i in range(s):
                if sidx[i] == j:
                    skip = True
                    break
            if skip:
                continue
            if m[j] & ~union_ == 0:
                covered.append(j)
        if len(covered) >= big_l:
            return tuple(sidx[i] for i in range(s)), tuple(covered)
        if not _next_comb(sidx, s, t):
            break
    return None


def covered_columns(masks, int n_pick):
    cdef uint64_t[::1] m = np.ascontiguousarray(masks, dtype=np.uint64)
    cdef int t = m.shape[0]
    out = []
    if t - 1 < n_pick:
        return out
    cdef int[::1] cand = np.zeros(t, dtype=np.intc)
    cdef int[::1] cidx = np.zeros(n_pick if n_pick > 0 else 1, dtype=np.intc)
    cdef uint64_t target, full, union_
    cdef int j, k, i, n_cand, size
    for j in range(t):
        target = m[j]
        if target == 0:
            out.append(j)
            continue
        n_cand = 0
        full = 0
        for k in range(t):
            if k != j and (m[k] & target) != 0:
                cand[n_cand] = k
                n_cand += 1
                full |= m[k]
        if target & ~full != 0:
            continue
        size = n_pick if n_pick < n_cand else n_cand
        _reset_comb(cidx, size)
        while True:
            union_ = 0
            for i in range(size):
                union_ |= m[cand[cidx[i]]]
            if target & ~union_ == 0:
                out.append(j)
                break
            if not _next_comb(cidx, size, n_cand):
                break
    return out
