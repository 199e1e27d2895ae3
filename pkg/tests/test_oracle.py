from math import comb

import pytest

from dyckstat import oracle
from dyckstat.errors import OracleBoundExceeded


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def test_enum_dyck_counts_and_order():
    assert [w.steps for w in oracle.enum_dyck(2)] == ["uudd", "udud"]
    for n in range(0, 9):
        assert sum(1 for _ in oracle.enum_dyck(n)) == catalan(n)


def test_bounds_precedence(monkeypatch):
    with pytest.raises(OracleBoundExceeded):
        next(oracle.enum_dyck(5, max_n=4))
    monkeypatch.setenv("DYCKSTAT_MAX_DYCK_N", "3")
    with pytest.raises(OracleBoundExceeded):
        oracle.scan_paths(4)
    oracle.set_bounds(dyck=4)
    assert len(oracle.scan_paths(4)) == 14
    assert len(oracle.scan_paths(4, max_n=5)) == 14
    oracle.set_bounds()
    with pytest.raises(OracleBoundExceeded):
        oracle.scan_paths(4)


def test_other_bounds():
    with pytest.raises(OracleBoundExceeded):
        next(oracle.enum_catalan_words(7))
    with pytest.raises(OracleBoundExceeded):
        oracle.enum_321_3cycle(12)
    with pytest.raises(ValueError):
        oracle.enum_321_3cycle(4)


def test_catalan_words_and_projections():
    words = list(oracle.enum_catalan_words(3))
    assert len(words) == 42
    assert oracle.projections("xxyxyzzxyyzz") == ("uudududd", "uudduudd")


def test_three_cycle_permutations():
    perms = list(oracle.all_three_cycle_permutations(6))
    assert len(perms) == 40
    assert all(oracle.cycle_type(p) == [3, 3] for p in perms)
    assert not list(oracle.all_three_cycle_permutations(4))
    assert oracle.avoids_321((2, 3, 1)) and not oracle.avoids_321((3, 2, 1))


def test_histogram_shapes():
    hist = oracle.l_histogram(5)
    assert sum(hist.values()) == 42
    assert list(hist) == sorted(hist)
    joint = oracle.joint_histogram(4)
    assert sum(joint.values()) == 14


def test_parallel_scan_matches_serial():
    assert oracle.scan_paths(8, workers=3) == list(oracle.scan_paths(8))


def test_star_signature():
    assert oracle.star_signature("ududud") == (2, 2)
    assert oracle.star_signature("uuuddd") == ()
