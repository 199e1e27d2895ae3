import pytest

from dyckstat.errors import InvalidCharacter, PrefixViolation, UnbalancedWord
from dyckstat.words import (
    CatalanWord,
    DyckWord,
    MotzkinWord,
    StarWord,
    asc_desc,
    from_asc_desc,
    l_statistic,
    parse_word,
    render,
    returns,
    reverse_motzkin,
    rs_array,
    star_context,
)
from dyckstat import figures, oracle


@pytest.mark.parametrize(
    "cls, text, exc",
    [
        (DyckWord, "uxd", InvalidCharacter),
        (DyckWord, "duud", PrefixViolation),
        (DyckWord, "uud", UnbalancedWord),
        (MotzkinWord, "hdu", PrefixViolation),
        (StarWord, "*d", PrefixViolation),
        (CatalanWord, "xzy", PrefixViolation),
        (CatalanWord, "xxyz", UnbalancedWord),
    ],
)
def test_malformed_words_rejected(cls, text, exc):
    with pytest.raises(exc):
        cls(text)


def test_error_position_is_reported():
    with pytest.raises(PrefixViolation, match="position 3"):
        DyckWord("udd")


def test_parse_and_render_roundtrip():
    for alphabet, text in [("dyck", "uudd"), ("motzkin", "uhd"), ("star", "u*d"), ("catalan", "xyz")]:
        assert render(parse_word(text, alphabet)) == text


def test_empty_dyck_word():
    d = DyckWord("")
    assert d.semilength == 0
    assert l_statistic(d) == 1
    assert returns(d) == 0


def test_example_path_statistics():
    d = figures.EXAMPLE_PATH
    assert d.semilength == 15
    assert asc_desc(d) == (figures.EXAMPLE_ASC, figures.EXAMPLE_DES)
    assert rs_array(d) == (figures.EXAMPLE_R, figures.EXAMPLE_S)
    assert l_statistic(d) == 24
    # A height scan finds two returns.
    assert returns(d) == 2


@pytest.mark.parametrize("n", range(1, 8))
def test_asc_desc_roundtrip(n):
    for d in oracle.enum_dyck(n):
        assert from_asc_desc(*asc_desc(d)) == d


def test_from_asc_desc_rejects_bad_pairs():
    with pytest.raises(ValueError):
        from_asc_desc((1, 2), (2, 2))
    with pytest.raises(ValueError):
        from_asc_desc((2,), (1,))


def test_rs_array_columns():
    arr = rs_array("uududd")
    assert arr.columns == [(0, 1), (1, 0)]
    assert l_statistic("uududd") == 1
    assert rs_array("ududud").columns == [(1, 1), (1, 1)]
    assert l_statistic("ududud") == 4


def test_reverse_motzkin_is_involution():
    for m in oracle.enum_motzkin(6):
        assert reverse_motzkin(reverse_motzkin(m)) == m
    assert reverse_motzkin("uhd").steps == "uhd"
    assert reverse_motzkin("uhudhd").steps == "uhudhd"
    assert reverse_motzkin("huuhdhd").steps == "uhuhddh"


def test_star_context():
    stars = star_context("u*hd*")
    assert [(s.position, s.ups, s.downs) for s in stars] == [(2, 1, 0), (5, 1, 1)]
    assert StarWord("u*hd*").star_count == 2
