"""Bad-pair probabilities over the constant-weight ensemble.

``exact_P0_cf`` sums the cover-free bad-pair probability over all row-pattern
types of the two column blocks: a type with n(0) all-zero rows on the S side
and m(1) all-one rows on the L side is bad with probability
C(N-n(0), m(1))/C(N, m(1)), and the number of ordered blocks carrying a type
is its multinomial coefficient.  Everything is exact rational arithmetic.

``mc_pair_probability`` estimates the same event (or its list-decoding
analogue: the union of the s columns covers all of the others) by sampling.
The estimator draws all trial columns from one PCG64 stream in fixed order,
vectorized over uint64 masks for codes with at most 64 rows.
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

import numpy as np

__all__ = ["exact_P0_cf", "mc_pair_probability"]

_MC_CHUNK = 50_000


def _block_types(N: int, w: int, k: int, ones_of_all: bool) -> Iterator[tuple[int, Fraction]]:
    """Types of k weight-w columns: yields (count, multinomial) where count is
    the number of all-zero rows (``ones_of_all=False``) or all-one rows
    (``ones_of_all=True``).  Marginal constraints leave one free cell for
    k = 2 and none for k = 1."""
    if k == 1:
        yield (w if ones_of_all else N - w), Fraction(comb(N, w))
        return
    for n11 in range(max(0, 2 * w - N), w + 1):
        n01 = w - n11
        n10 = w - n11
        n00 = N - n01 - n10 - n11
        mult = Fraction(
            factorial(N),
            factorial(n00) * factorial(n01) * factorial(n10) * factorial(n11),
        )
        yield (n11 if ones_of_all else n00), mult


def exact_P0_cf(N: int, w: int, s: int, l: int) -> float:
    """Exact probability that a fixed (S, L) pair of ensemble columns is bad.

    Guards: s <= 2, l <= 2, N <= 40 (the type enumeration is hand-rolled for
    one free cell per block); larger cases belong to the Monte-Carlo path.
    """
    if not (1 <= s <= 2 and 1 <= l <= 2):
        raise ValueError("exact path is implemented for s <= 2 and l <= 2")
    if not 1 <= N <= 40:
        raise ValueError("exact path is guarded to N <= 40")
    if not 1 <= w < N:
        raise ValueError("need 1 <= w < N")
    total = Fraction(0)
    for n0, mult_x in _block_types(N, w, s, ones_of_all=False):
        for m1, mult_y in _block_types(N, w, l, ones_of_all=True):
            if n0 + m1 > N:
                continue  # some all-one row of L escapes S: the pair is good
            total += mult_x * mult_y * Fraction(comb(N - n0, m1), comb(N, m1))
    return float(total / Fraction(comb(N, w)) ** (s + l))


def _sample_masks(rng: np.random.Generator, n: int, k: int, N: int, w: int) -> np.ndarray:
    """(n, k) uint64 masks of i.i.d. weight-w columns."""
    u = rng.random((n * k, N))
    idx = np.argsort(u, axis=1)[:, :w].astype(np.uint64)
    masks = np.bitwise_or.reduce(np.left_shift(np.uint64(1), idx), axis=1)
    return masks.reshape(n, k)


def _count_bad(masks: np.ndarray, s: int, l: int, model: str) -> int:
    ors = np.bitwise_or.reduce(masks[:, :s], axis=1)
    if model == "cf":
        tail = np.bitwise_and.reduce(masks[:, s:], axis=1)
    else:
        tail = np.bitwise_or.reduce(masks[:, s:], axis=1)
    return int(np.count_nonzero((tail & ~ors) == 0))


def mc_pair_probability(
    N: int,
    w: int,
    s: int,
    second: int,
    model: str,
    trials: int,
    seed: int,
) -> tuple[float, float]:
    """Monte-Carlo estimate of the bad-pair probability and its binomial
    standard error.

    ``model="cf"``: no row is 1 on the l trailing columns and 0 on the s
    leading ones.  ``model="ld"``: the union of the s leading columns covers
    the union of the L trailing ones.  The two events coincide at l = L = 1.
    """
    if model not in ("cf", "ld"):
        raise ValueError(f"unknown model {model!r}")
    if trials < 1000:
        raise ValueError("trials must be >= 1000")
    if not 1 <= w < N:
        raise ValueError("need 1 <= w < N")
    if s < 1 or second < 1:
        raise ValueError("s and the second parameter must be >= 1")
    k = s + second
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=seed)))
    bad = 0
    done = 0
    if N <= 64:
        while done < trials:
            n = min(_MC_CHUNK, trials - done)
            bad += _count_bad(_sample_masks(rng, n, k, N, w), s, second, model)
            done += n
    else:
        # General path: arbitrary-precision Python masks.
        while done < trials:
            n = min(_MC_CHUNK, trials - done)
            u = rng.random((n * k, N))
            idx = np.argsort(u, axis=1)[:, :w]
            for row in range(n):
                cols = []
                for c in range(k):
                    m = 0
                    for r in idx[row * k + c]:
                        m |= 1 << int(r)
                    cols.append(m)
                union_s = 0
                for c in cols[:s]:
                    union_s |= c
                if model == "cf":
                    tail = cols[s]
                    for c in cols[s + 1 :]:
                        tail &= c
                else:
                    tail = 0
                    for c in cols[s:]:
                        tail |= c
                if tail & ~union_s == 0:
                    bad += 1
            done += n
    p_hat = bad / trials
    stderr = math.sqrt(p_hat * (1.0 - p_hat) / trials)
    return p_hat, stderr
