"""Parity between the compiled and pure subset-scan backends."""
import random

import pytest

from coverfree import _slowscan
from coverfree.scan import HAVE_FASTSCAN

fastscan = pytest.importorskip("coverfree._fastscan") if HAVE_FASTSCAN else None

pytestmark = pytest.mark.skipif(
    not HAVE_FASTSCAN, reason="compiled extension not built"
)


def random_instances(count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(4, 16)
        t = rng.randint(3, 9)
        yield n, [rng.getrandbits(n) | 1 for _ in range(t)]


def test_cf_find_bad_parity():
    for n, masks in random_instances(150, 1):
        for s in (1, 2, 3):
            for l in (1, 2):
                if s + l > len(masks):
                    continue
                assert _slowscan.cf_find_bad(masks, s, l) == fastscan.cf_find_bad(
                    masks, s, l
                )


def test_cf_purge_parity():
    for n, masks in random_instances(150, 2):
        for s, l in ((1, 1), (2, 1), (2, 2)):
            if s + l > len(masks):
                continue
            assert _slowscan.cf_purge(masks, s, l) == list(
                fastscan.cf_purge(masks, s, l)
            )


def test_ld_find_bad_parity():
    for n, masks in random_instances(150, 3):
        for s in (1, 2, 3):
            if s >= len(masks):
                continue
            for L in (1, 2, 3):
                assert _slowscan.ld_find_bad(masks, s, L) == fastscan.ld_find_bad(
                    masks, s, L
                )


def test_covered_columns_parity():
    for n, masks in random_instances(150, 4):
        for pick in (1, 2, 3):
            assert _slowscan.covered_columns(masks, pick) == list(
                fastscan.covered_columns(masks, pick)
            )


def test_dispatch_uses_pure_beyond_64_rows():
    from coverfree.scan import backend_name

    assert backend_name(64) in ("compiled", "pure")
    assert backend_name(65) == "pure"


def test_wide_code_pure_path():
    # 70-row masks exceed uint64; the dispatcher must still verify them.
    from coverfree import BinaryCode, is_cover_free

    cols = [(i,) for i in range(3)] + [(67,), (68, 69)]
    code = BinaryCode(70, tuple(cols))
    assert is_cover_free(code, 2, 1)[0]
    bad = BinaryCode(70, tuple(cols) + ((67, 68, 69),))
    ok, witness = is_cover_free(bad, 2, 1)
    assert not ok and witness is not None
