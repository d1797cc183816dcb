"""Ensemble generation, purging, exhaustive search, and pair probabilities."""
import itertools
import math

import numpy as np
import pytest

from coverfree import (
    BinaryCode,
    DegenerateCodeError,
    exact_P0_cf,
    exhaustive_max_t,
    exponent_disjunctive,
    is_cover_free,
    mc_pair_probability,
    purge_construction,
    random_constant_weight,
)


class TestRandomConstantWeight:
    def test_weights(self):
        code = random_constant_weight(12, 30, 0.3, seed=0)
        assert all(w == 3 for w in code.weights)

    def test_seed_determinism(self):
        a = random_constant_weight(10, 20, 0.4, seed=5)
        b = random_constant_weight(10, 20, 0.4, seed=5)
        assert a == b
        others = [random_constant_weight(10, 20, 0.4, seed=s) for s in range(10)]
        assert len({c.columns for c in others}) == 10

    def test_position_frequencies(self):
        n, t, q = 16, 10_000, 0.25
        code = random_constant_weight(n, t, q, seed=2)
        counts = [0] * n
        for col in code.columns:
            for r in col:
                counts[r] += 1
        p = 4 / 16
        sigma = math.sqrt(t * p * (1 - p))
        for c in counts:
            assert abs(c - t * p) <= 3 * sigma

    def test_domain(self):
        with pytest.raises(ValueError):
            random_constant_weight(10, 5, 0.05, seed=0)  # floor(Q*N) = 0
        with pytest.raises(ValueError):
            random_constant_weight(10, 5, 1.0, seed=0)


class TestPurgeConstruction:
    def test_output_always_certifies(self):
        for seed in range(5):
            code = purge_construction(12, 2, 1, 0.25, 24, seed=seed)
            assert is_cover_free(code, 2, 1)[0]

    def test_deterministic(self):
        a = purge_construction(12, 2, 1, 0.25, 24, seed=9)
        b = purge_construction(12, 2, 1, 0.25, 24, seed=9)
        assert a == b

    def test_antichain_cap(self):
        # 70 weight-4 columns over 8 rows purge down to an antichain; the
        # middle layer has exactly 70 columns, so survivors stay below that.
        code = purge_construction(8, 1, 1, 0.5, 70, seed=1)
        assert code.n_cols <= 70
        masks = code.masks
        for a, b in itertools.combinations(masks, 2):
            assert a & ~b != 0 and b & ~a != 0

    def test_degenerate(self):
        # Three weight-1 columns over two rows cannot host a (2,1) property:
        # the union of any two alive columns swallows the third, so purging
        # always drops below s + l survivors.
        with pytest.raises(DegenerateCodeError):
            purge_construction(2, 2, 1, 0.5, 3, seed=0)


class TestExhaustiveSearch:
    @pytest.mark.parametrize("n,expected", [(2, 2), (3, 3), (4, 6), (5, 10)])
    def test_antichain_matches_middle_layer(self, n, expected):
        best, code = exhaustive_max_t(n, 1, 1)
        assert best == expected == math.comb(n, n // 2)
        assert is_cover_free(code, 1, 1)[0]

    @pytest.mark.parametrize(
        "n,s,l,expected",
        [(3, 2, 1, 3), (4, 2, 1, 4), (5, 2, 1, 5), (4, 2, 2, 3), (5, 3, 1, 5)],
    )
    def test_small_optima(self, n, s, l, expected):
        best, code = exhaustive_max_t(n, s, l)
        assert best == expected
        if best >= s + l:
            assert is_cover_free(code, s, l)[0]

    def test_t_cap(self):
        best, _ = exhaustive_max_t(4, 1, 1, t_cap=3)
        assert best == 3

    def test_guards(self):
        with pytest.raises(ValueError):
            exhaustive_max_t(6, 1, 1)
        with pytest.raises(ValueError):
            exhaustive_max_t(7, 2, 1)


class TestExactP0:
    def test_weight2_length4(self):
        # A weight-2 column is covered by another weight-2 column iff equal.
        assert exact_P0_cf(4, 2, 1, 1) == pytest.approx(1.0 / 6.0, rel=1e-15)

    def test_enumeration_cross_check(self):
        # Direct enumeration over all ordered pairs of weight-2 columns.
        cols = [m for m in range(16) if bin(m).count("1") == 2]
        bad = sum(1 for a in cols for b in cols if b & ~a == 0)
        assert exact_P0_cf(4, 2, 1, 1) == pytest.approx(bad / len(cols) ** 2, rel=1e-15)

    def test_exact_vs_enumeration_s2(self):
        # Brute force over all ordered (x1, x2, y) triples at N=5, w=2.
        n, w = 5, 2
        cols = [m for m in range(1 << n) if bin(m).count("1") == w]
        bad = 0
        for x1 in cols:
            for x2 in cols:
                u = x1 | x2
                for y in cols:
                    if y & ~u == 0:
                        bad += 1
        expected = bad / len(cols) ** 3
        assert exact_P0_cf(n, w, 2, 1) == pytest.approx(expected, rel=1e-12)

    def test_exact_vs_enumeration_l2(self):
        # Brute force for the (1, 2) orientation: intersection of two columns
        # covered by one other column.
        n, w = 5, 3
        cols = [m for m in range(1 << n) if bin(m).count("1") == w]
        bad = 0
        for x in cols:
            for y1 in cols:
                for y2 in cols:
                    if (y1 & y2) & ~x == 0:
                        bad += 1
        expected = bad / len(cols) ** 3
        assert exact_P0_cf(n, w, 1, 2) == pytest.approx(expected, rel=1e-12)

    def test_exponent_trend(self):
        values = []
        for n in (16, 24, 32, 40):
            w = int(0.26 * n)
            p = exact_P0_cf(n, w, 2, 1)
            values.append(-math.log2(p) / n)
        limit = exponent_disjunctive(2, 0.26)
        gaps = [limit - v for v in values]
        assert all(b > a for a, b in zip(values, values[1:]))
        assert all(g > 0 for g in gaps)
        assert all(b < a for a, b in zip(gaps, gaps[1:]))

    def test_guards(self):
        with pytest.raises(ValueError):
            exact_P0_cf(50, 10, 2, 1)
        with pytest.raises(ValueError):
            exact_P0_cf(20, 5, 3, 1)


class TestMonteCarlo:
    def test_matches_exact_small(self):
        est, err = mc_pair_probability(4, 2, 1, 1, "cf", 100_000, seed=7)
        assert abs(est - 1.0 / 6.0) <= 3 * err

    def test_matches_exact_s2(self):
        est, err = mc_pair_probability(12, 3, 2, 1, "cf", 200_000, seed=3)
        exact = exact_P0_cf(12, 3, 2, 1)
        assert abs(est - exact) <= 3 * err

    def test_ld_equals_cf_at_one(self):
        a, ea = mc_pair_probability(10, 3, 2, 1, "cf", 50_000, seed=1)
        b, eb = mc_pair_probability(10, 3, 2, 1, "ld", 50_000, seed=2)
        assert abs(a - b) <= 3 * math.hypot(ea, eb)

    def test_decreasing_in_length(self):
        estimates = []
        for n in (8, 16, 24):
            w = n // 4
            est, _ = mc_pair_probability(n, w, 1, 1, "cf", 40_000, seed=4)
            estimates.append(est)
        assert estimates[0] > estimates[1] > estimates[2]

    def test_general_path_matches_fast_path_statistically(self):
        # N > 64 exercises the arbitrary-precision path.
        est, err = mc_pair_probability(72, 18, 1, 1, "cf", 2_000, seed=6)
        assert 0.0 <= est <= 1.0 and err >= 0.0

    def test_guards(self):
        with pytest.raises(ValueError):
            mc_pair_probability(10, 3, 1, 1, "cf", 100, seed=0)
        with pytest.raises(ValueError):
            mc_pair_probability(10, 3, 1, 1, "nope", 5000, seed=0)
