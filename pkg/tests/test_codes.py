import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverfree import (
    BinaryCode,
    CodeFormatError,
    bad_columns,
    is_cover_free,
    is_list_decoding,
    is_plan,
    recheck,
)


def code_from_masks(n, masks):
    return BinaryCode.from_masks(n, masks)


@st.composite
def random_codes(draw, max_rows=10, max_cols=8):
    n = draw(st.integers(2, max_rows))
    t = draw(st.integers(2, max_cols))
    masks = draw(
        st.lists(st.integers(1, (1 << n) - 1), min_size=t, max_size=t)
    )
    return code_from_masks(n, masks)


class TestBinaryCode:
    def test_identity_shape(self):
        code = BinaryCode.identity(4)
        assert code.n_rows == 4
        assert code.n_cols == 4
        assert code.weights == (1, 1, 1, 1)
        assert code.masks == (1, 2, 4, 8)

    def test_text_roundtrip(self):
        code = code_from_masks(5, [3, 17, 12, 9])
        again = BinaryCode.from_text(code.to_text())
        assert again == code

    def test_json_roundtrip(self):
        code = code_from_masks(6, [33, 7, 48])
        again = BinaryCode.from_json_obj(json.loads(json.dumps(code.to_json_obj())))
        assert again == code

    @settings(max_examples=60, deadline=None)
    @given(random_codes())
    def test_roundtrip_property(self, code):
        assert BinaryCode.from_text(code.to_text()) == code
        assert BinaryCode.from_json_obj(code.to_json_obj()) == code

    def test_load_detects_format(self, tmp_path):
        code = code_from_masks(4, [5, 10, 3])
        p_text = tmp_path / "c.txt"
        p_json = tmp_path / "c.json"
        code.save(p_text, "text")
        code.save(p_json, "json")
        assert BinaryCode.load(p_text) == code
        assert BinaryCode.load(p_json) == code

    @pytest.mark.parametrize(
        "text",
        ["", "3\n010\n001\n100\n", "2 2\n01\n0\n", "2 2\n01\n0x\n", "2 2\n01\n"],
    )
    def test_malformed_text(self, text):
        with pytest.raises(CodeFormatError):
            BinaryCode.from_text(text)

    def test_validation(self):
        with pytest.raises(ValueError):
            BinaryCode(3, ((0, 5),))
        with pytest.raises(ValueError):
            BinaryCode(0, ((0,),))


class TestCoverFree:
    def test_identity_cases(self):
        code = BinaryCode.identity(4)
        ok, witness = is_cover_free(code, 2, 1)
        assert ok and witness is None
        ok, witness = is_cover_free(code, 1, 2)
        assert not ok
        assert witness.kind == "cover_free"
        assert recheck(code, witness)

    def test_domain(self):
        code = BinaryCode.identity(3)
        with pytest.raises(ValueError):
            is_cover_free(code, 2, 2)

    def test_monotone_in_parameters(self):
        # Valid at (s, l) implies valid at (s-1, l) and (s, l-1).
        import numpy as np

        rng = np.random.default_rng(10)
        checked = 0
        while checked < 40:
            n = int(rng.integers(4, 9))
            t = int(rng.integers(4, 7))
            masks = [int(rng.integers(1, 1 << n)) for _ in range(t)]
            code = code_from_masks(n, masks)
            for s, l in ((2, 2), (3, 2)):
                if s + l > t:
                    continue
                if is_cover_free(code, s, l)[0]:
                    assert is_cover_free(code, s - 1, l)[0]
                    assert is_cover_free(code, s, l - 1)[0]
                checked += 1


class TestListDecoding:
    def test_identity(self):
        assert is_list_decoding(BinaryCode.identity(3), 2, 1)[0]

    def test_duplicate_column(self):
        code = code_from_masks(3, [3, 3, 4])
        ok, witness = is_list_decoding(code, 1, 1)
        assert not ok
        assert recheck(code, witness)

    def test_agrees_with_cover_free_at_one(self):
        import numpy as np

        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(2, 11))
            t = int(rng.integers(4, 9))
            s = int(rng.integers(1, 4))
            masks = [int(rng.integers(1, 1 << n)) for _ in range(t)]
            code = code_from_masks(n, masks)
            assert is_cover_free(code, s, 1)[0] == is_list_decoding(code, s, 1)[0]


class TestPlan:
    def test_identity_exact(self):
        assert is_plan(BinaryCode.identity(3), 2, "exact")[0]

    def test_or_closure_violates_at_most(self):
        code = code_from_masks(3, [1, 2, 3])
        ok, witness = is_plan(code, 2, "at_most")
        assert not ok
        assert recheck(code, witness)
        assert {tuple(witness.set_s), tuple(witness.set_l)} == {(2,), (0, 1)}

    def test_exact_plan_implies_list_decoding(self):
        # Distinct exact-s unions are a sufficient condition for being a
        # list-decoding code of strength s-1 with list size 2.
        import numpy as np

        rng = np.random.default_rng(12)
        hits = 0
        for _ in range(400):
            n = int(rng.integers(5, 11))
            t = int(rng.integers(4, 8))
            s = int(rng.integers(2, 4))
            if s >= t:
                continue
            masks = [int(rng.integers(1, 1 << n)) for _ in range(t)]
            code = code_from_masks(n, masks)
            if is_plan(code, s, "exact")[0]:
                hits += 1
                assert is_list_decoding(code, s - 1, 2)[0]
        assert hits > 20


def externally_covered(code, s, L):
    """Bad columns covered by floor(s/L) good columns alone."""
    bad = bad_columns(code, s, L)
    goods = [code.masks[j] for j in range(code.n_cols) if j not in bad]
    n_pick = min(s // L, len(goods))
    count = 0
    for j in bad:
        target = code.masks[j]
        if any(
            target & ~_or(sub) == 0 for sub in itertools.combinations(goods, n_pick)
        ):
            count += 1
    return count


def _or(masks):
    u = 0
    for m in masks:
        u |= m
    return u


class TestBadColumns:
    def test_or_column_is_bad(self):
        # In {e1, e2, e1|e2, e3} the combined column is covered by the two
        # units; each unit is itself inside the combined column and so is
        # also covered by two others.  Only e3 is good.
        code = code_from_masks(4, [1, 2, 3, 8])
        assert bad_columns(code, 4, 2) == frozenset({0, 1, 2})

    def test_identity_has_none(self):
        assert bad_columns(BinaryCode.identity(5), 4, 2) == frozenset()

    def test_single_cover_family_bound(self):
        # For floor(s/L) = 1 and duplicate-free columns, covers are strict
        # containments, so a valid list-decoding code has at most L-1 bad
        # columns: two non-maximal columns would be covered by a set
        # avoiding both, contradicting validity when t >= s + L.
        from coverfree import random_constant_weight

        s, L = 3, 2
        valid = 0
        for seed in range(120):
            n = 10 + seed % 4
            code = random_constant_weight(n, 7, 0.3, seed)
            if len(set(code.masks)) < code.n_cols:
                continue
            if is_list_decoding(code, s, L)[0]:
                valid += 1
                assert len(bad_columns(code, s, L)) <= L - 1
        assert valid >= 10

    def test_good_columns_form_disjunctive_code(self):
        # Always true: a good column is covered by no floor(s/L) others at
        # all, in particular by none of the other good columns.
        from coverfree import random_constant_weight

        s, L = 4, 2
        checked = 0
        for seed in range(40):
            n = 12 + seed % 4
            code = random_constant_weight(n, 8, 0.28, seed)
            bad = bad_columns(code, s, L)
            goods = [code.columns[j] for j in range(code.n_cols) if j not in bad]
            if len(goods) > s // L + 1:
                sub = BinaryCode(code.n_rows, tuple(goods))
                assert is_cover_free(sub, s // L, 1)[0]
                checked += 1
        assert checked >= 10

    def test_externally_covered_bound(self):
        # The provable form of the few-bad-columns property: at most L-1
        # columns are covered by good columns alone (their covering set then
        # avoids every bad column, and a violating s-set can be padded
        # whenever t >= s + L).
        from coverfree import random_constant_weight

        s, L = 4, 2
        valid = 0
        for seed in range(200):
            n = 12 + seed % 4
            code = random_constant_weight(n, 8, 0.28, seed)
            if is_list_decoding(code, s, L)[0]:
                valid += 1
                assert externally_covered(code, s, L) <= L - 1
        assert valid >= 3

    def test_mutual_cover_escapes_the_bound(self):
        # Two columns sharing a private row and covering each other with one
        # helper apiece are both bad, yet the code is a valid LD 4_2 code:
        # every s-set that covers one of them must contain the other.  The
        # at-most-(L-1) count therefore does not extend to covers that lean
        # on other bad columns.
        code = BinaryCode.from_columns(
            7, [(2, 3), (1, 3), (2, 5), (1, 6), (0,), (4,)]
        )
        assert is_list_decoding(code, 4, 2)[0]
        assert bad_columns(code, 4, 2) == frozenset({0, 1})
        assert externally_covered(code, 4, 2) == 0

    def test_domain(self):
        with pytest.raises(ValueError):
            bad_columns(BinaryCode.identity(4), 2, 2)


class TestCountingBound:
    def test_accepted_codes_respect_it(self):
        # Every accepted list-decoding code satisfies the row-count lower
        # bound N >= log2(C(t,s)/C(s+L-1,s)).
        import numpy as np

        from coverfree import ld_counting_bound

        rng = np.random.default_rng(15)
        accepted = 0
        for _ in range(300):
            n = int(rng.integers(3, 11))
            t = int(rng.integers(4, 9))
            s = int(rng.integers(1, min(4, t)))
            L = int(rng.integers(1, t - s + 1))
            masks = [int(rng.integers(1, 1 << n)) for _ in range(t)]
            code = code_from_masks(n, masks)
            if is_list_decoding(code, s, L)[0]:
                accepted += 1
                assert code.n_rows >= ld_counting_bound(t, s, L) - 1e-9
        assert accepted > 50


class TestWitnessSoundness:
    def test_witnesses_replay(self):
        import numpy as np

        rng = np.random.default_rng(14)
        replayed = 0
        for _ in range(200):
            n = int(rng.integers(3, 9))
            t = int(rng.integers(4, 8))
            masks = [int(rng.integers(1, 1 << n)) for _ in range(t)]
            code = code_from_masks(n, masks)
            for fn, args in (
                (is_cover_free, (2, 1)),
                (is_list_decoding, (2, 2)),
                (is_plan, (2, "exact")),
            ):
                if fn is is_cover_free and t < 3:
                    continue
                ok, witness = fn(code, *args)
                if not ok:
                    assert recheck(code, witness)
                    replayed += 1
        assert replayed > 50
