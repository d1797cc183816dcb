"""Acceptance gate: one test per release criterion, at the stated tolerance.

Heavy grids are computed once in module fixtures; each criterion prints its
own pass line (visible with -s) and enforces its runtime budget where one is
stated.
"""
import math
import time

import pytest

import coverfree as cf
from coverfree import refvalues
from coverfree.refvalues import TABLE1, TABLE2, TABLE2_LIMIT, Q_TOL, ulp_of
from coverfree.tables import RateTable, compare

LN2 = math.log(2.0)


def _report(num: int, text: str) -> None:
    print(f"[acceptance {num:02d}] PASS - {text}")


# ---------------------------------------------------------------------------
# Shared grids
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def t1_lower_grid():
    """All 45 cover-free lower bounds with 2 <= l <= s <= 10, timed."""
    t0 = time.perf_counter()
    cells = {}
    for s in range(2, 11):
        for l in range(2, s + 1):
            cells[(s, l)] = cf.lower_bound_cf(s, l)
    return cells, time.perf_counter() - t0


@pytest.fixture(scope="module")
def t1_upper_grids():
    return (
        cf.upper_bound_cf_grid(10, 10, use_splitting=True),
        cf.upper_bound_cf_grid(10, 10, use_splitting=False),
    )


@pytest.fixture(scope="module")
def t2_grid():
    """Table 2 list-decoding lower bounds, timed together with the limit row."""
    t0 = time.perf_counter()
    cells = {}
    for s in range(2, 7):
        for L in range(2, 7):
            cells[(s, L)] = cf.lower_bound_ld(s, L)
    limits = {s: cf.ld_limit(s) for s in range(2, 7)}
    return cells, limits, time.perf_counter() - t0


@pytest.fixture(scope="module")
def disjunctive_lowers():
    t0 = time.perf_counter()
    results = {s: cf.lower_bound_disjunctive(s) for s in range(2, 11)}
    chain = cf.upper_bound_disjunctive(10)
    return results, chain, time.perf_counter() - t0


# ---------------------------------------------------------------------------
# Criteria
# ---------------------------------------------------------------------------

def test_criterion_01_table1_first_column(disjunctive_lowers):
    results, chain, elapsed = disjunctive_lowers
    uppers = [3.22e-1, 1.99e-1, 1.40e-1, 1.06e-1, 8.30e-2, 6.73e-2, 5.59e-2, 4.73e-2, 4.07e-2]
    lowers = [1.83e-1, 7.87e-2, 4.39e-2, 2.79e-2, 1.94e-2, 1.42e-2, 1.09e-2, 8.58e-3, 6.94e-3]
    for i, s in enumerate(range(2, 11)):
        tol_u = refvalues.sig3_tol(uppers[i])
        tol_l = refvalues.sig3_tol(lowers[i])
        assert abs(chain.value(s) - uppers[i]) <= tol_u, f"upper s={s}"
        assert abs(results[s].value - lowers[i]) <= tol_l, f"lower s={s}"
        printed_q = float(TABLE1[(s, 1)][2])
        assert abs(results[s].params["Q"] - printed_q) <= Q_TOL, f"Q s={s}"
    assert elapsed < 5.0, f"first-column runtime {elapsed:.2f}s >= 5s"
    _report(1, f"first-column bounds and weights for s=2..10 in {elapsed:.2f}s")


def test_criterion_02_table1_lower_grid(t1_lower_grid):
    cells, elapsed = t1_lower_grid
    assert len(cells) == 45
    for (s, l), r in cells.items():
        ref = TABLE1[(s, l)][1]
        assert abs(r.value - float(ref)) <= ulp_of(ref), f"({s},{l}): {r.value} vs {ref}"
        ref_q = TABLE1[(s, l)][2]
        assert abs(r.params["Q"] - float(ref_q)) <= Q_TOL, f"Q({s},{l})"
    for s in range(2, 11):
        assert abs(cells[(s, s)].params["Q"] - 0.50) <= 0.01
    assert elapsed < 60.0, f"lower-grid runtime {elapsed:.2f}s >= 60s"
    _report(2, f"45 lower-bound cells at print precision in {elapsed:.1f}s")


def test_criterion_03_table1_upper_grid(t1_upper_grids, t1_lower_grid):
    split, plain = t1_upper_grids
    spot = {(2, 2): 1.61e-1, (3, 3): 3.72e-2, (7, 4): 1.57e-3}
    for (s, l), v in spot.items():
        assert abs(split[(s, l)] - v) <= refvalues.sig3_tol(v)
    for (s, l), (ref_u, _, _) in TABLE1.items():
        if l >= 2:
            assert abs(split[(s, l)] - float(ref_u)) <= ulp_of(ref_u), f"({s},{l})"
    # Without the refinement the published diagonal cells are unreachable and
    # must surface as WARN, never FAIL.
    cells, _ = t1_lower_grid
    rows = []
    for s in range(2, 11):
        for l in range(2, s + 1):
            r = cells[(s, l)]
            rows.append(
                {"s": s, "l": l, "upper": plain[(s, l)], "lower": r.value,
                 "q": r.params["Q"], "lower_residual": r.residual,
                 "lower_iterations": r.iterations}
            )
    table = RateTable(
        kind="table1", rows=rows, provenance={"solver": {}, "splitting": False}
    )
    report = compare(table)
    statuses = {rec["status"] for rec in report}
    assert "FAIL" not in statuses
    warned = [rec["key"] for rec in report if rec["status"] == "WARN"]
    assert warned, "expected WARN cells with the refinement disabled"
    _report(3, f"45 refined upper cells match; {len(warned)} WARN cells without refinement")


def test_criterion_04_table2(t2_grid):
    cells, limits, elapsed = t2_grid
    for (s, L), r in cells.items():
        ref_v, ref_q = TABLE2[(s, L)]
        assert abs(r.value - float(ref_v)) <= ulp_of(ref_v), f"({s},{L})"
        assert abs(r.params["Q"] - float(ref_q)) <= Q_TOL, f"Q({s},{L})"
    for s, r in limits.items():
        ref = TABLE2_LIMIT[s]
        assert abs(r.value - float(ref)) <= ulp_of(ref)
    assert elapsed < 30.0, f"table-2 runtime {elapsed:.2f}s >= 30s"
    _report(4, f"25 list-decoding cells plus the limit row in {elapsed:.1f}s")


def test_criterion_05_table3():
    rows = cf.plan_upper_bound_row(7, 14)
    expected = [0.163, 0.141, 0.117, 0.102, 0.086, 0.076, 0.066, 0.059]
    for row, ref in zip(rows, expected):
        assert abs(row["bound"] - ref) <= 0.0015, f"s={row['s']}"
    improving = [row["s"] for row in rows if row["improves"]]
    assert improving == [11, 12, 13, 14]
    _report(5, "search-plan row matches and first improves at s=11")


def test_criterion_06_thresholds():
    values = [cf.threshold_sL(L) for L in range(1, 7)]
    assert values == [2, 6, 12, 20, 25, 36]
    _report(6, f"thresholds {values}")


def test_criterion_07_growth_check():
    t0 = time.perf_counter()
    rows = cf.k_growth_check(9, 236)
    elapsed = time.perf_counter() - t0
    assert all(r["ok"] for r in rows)
    assert elapsed < 2.0, f"growth check took {elapsed:.2f}s >= 2s"
    _report(7, f"quadratic growth bound holds on 9..236 in {elapsed:.2f}s")


def test_criterion_08_parametrization_equivalence(disjunctive_lowers):
    for s in range(2, 7):
        for L in range(1, 7):
            a = cf.lower_bound_ld(s, L).value
            b = cf.lower_bound_ld_alt(s, L).value
            assert abs(a - b) <= 1e-6, f"({s},{L}): {a} vs {b}"
    results, _, _ = disjunctive_lowers
    for s in range(2, 11):
        a = cf.lower_bound_ld(s, 1).value
        assert abs(a - results[s].value) <= 1e-9, f"s={s}"
    _report(8, "y- and Q-parametrizations agree; L=1 coincides with the disjunctive bound")


def test_criterion_09_symmetry_and_sandwich(t1_lower_grid, t1_upper_grids, t2_grid, disjunctive_lowers):
    # Orientation swap: value equal, weight mapped to its complement.
    for s, l in ((3, 2), (5, 3), (6, 2), (6, 5)):
        a = cf.lower_bound_cf(s, l)
        b = cf.lower_bound_cf(l, s)
        assert abs(a.value - b.value) <= 1e-8
        assert abs(a.params["Q"] - (1.0 - b.params["Q"])) <= 1e-6
    cells, _ = t1_lower_grid
    split, _ = t1_upper_grids
    lowers, chain, _ = disjunctive_lowers
    for (s, l), r in cells.items():
        assert r.value <= split[(s, l)] + 1e-12, f"sandwich ({s},{l})"
        assert r.value <= 1.0 / s + 1e-9
    for s in range(2, 11):
        assert lowers[s].value <= chain.value(s) + 1e-12
        assert lowers[s].value <= 1.0 / s + 1e-9
    ld_cells, limits, _ = t2_grid
    for (s, L), r in ld_cells.items():
        assert r.value <= 1.0 / s + 1e-9
    _report(9, "swap symmetry, lower <= upper, and the 1/s ceiling hold on every cell")


def test_criterion_10_asymptotic_trends():
    r50 = cf.lower_bound_disjunctive(50).value * 50**2
    r100 = cf.lower_bound_disjunctive(100).value * 100**2
    assert abs(r50 - 0.693) / 0.693 <= 0.15
    assert abs(r100 - 0.693) < abs(r50 - 0.693)
    chain = cf.upper_bound_disjunctive(200)
    ratio = chain.value(200) * 200**2 / (2 * math.log2(200))
    assert 0.5 <= ratio <= 1.5
    q = cf.lower_bound_ld(100, 2).params["Q"]
    assert abs(q - cf.asymptote("ld-weight", 100, 2)) <= 5e-4
    _report(
        10,
        f"R*s^2 -> {r50:.4f}/{r100:.4f}, upper trend ratio {ratio:.3f}, "
        f"weight gap {abs(q - cf.asymptote('ld-weight', 100, 2)):.1e}",
    )


def test_criterion_11_combinatorial_suite():
    t0 = time.perf_counter()
    # Exhaustive antichain optimum equals the middle binomial layer.
    for n in (2, 3, 4, 5):
        best, witness = cf.exhaustive_max_t(n, 1, 1)
        assert best == math.comb(n, n // 2)
        assert cf.is_cover_free(witness, 1, 1)[0]
    # Exact pair probability and its Monte-Carlo agreement.
    exact = cf.exact_P0_cf(4, 2, 1, 1)
    assert exact == pytest.approx(1.0 / 6.0, rel=1e-12)
    est, err = cf.mc_pair_probability(4, 2, 1, 1, "cf", 100_000, seed=7)
    assert abs(est - exact) <= 3 * err
    # Finite-length exponent climbs toward the random-coding limit.
    limit = cf.exponent_disjunctive(2, 0.26)
    values = []
    for n in (16, 24, 32, 40):
        values.append(-math.log2(cf.exact_P0_cf(n, int(0.26 * n), 2, 1)) / n)
    gaps = [limit - v for v in values]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert all(g > 0 for g in gaps)
    assert all(b < a for a, b in zip(gaps, gaps[1:]))
    # Purge outputs always certify; the expectation argument keeps at least
    # half of the target size in at least 80% of seeds.
    n_rows, rate = 40, 0.18
    t_target = 2 * int(2 ** (0.9 * n_rows * rate))
    wins = 0
    for seed in range(20):
        code = cf.purge_construction(n_rows, 2, 1, 0.26, t_target, seed)
        assert cf.is_cover_free(code, 2, 1)[0]
        if code.n_cols >= t_target // 2:
            wins += 1
    assert wins >= 16, f"purge kept >= half the columns in only {wins}/20 seeds"
    # Valid codes from the generator at floor(s/L) = 1 obey the bad-column
    # bound (a theorem for duplicate-free codes; see test_codes for the
    # mutual-cover caveat at floor(s/L) >= 2, where only the good-cover
    # refinement is provable).
    s, L = 3, 2
    valid = 0
    for seed in range(120):
        code = cf.random_constant_weight(10 + seed % 4, 7, 0.3, seed)
        if len(set(code.masks)) < code.n_cols:
            continue
        if cf.is_list_decoding(code, s, L)[0]:
            valid += 1
            assert len(cf.bad_columns(code, s, L)) <= L - 1
    assert valid >= 10
    elapsed = time.perf_counter() - t0
    assert elapsed < 180.0, f"combinatorial suite took {elapsed:.1f}s >= 180s"
    _report(11, f"combinatorial oracle suite ({valid} valid codes checked) in {elapsed:.1f}s")
