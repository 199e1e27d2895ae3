import pytest

from dyckstat import bijections as bj
from dyckstat import oracle
from dyckstat.errors import (
    BallotPreconditionViolated,
    DomainError,
    IndexOutOfRange,
    WrongStarCount,
)
from dyckstat.words import DyckWord, l_statistic, returns, rs_array, star_context


def test_star_word_worked_examples():
    assert bj.to_star_word("uuuuudduudddduuduudddd").letters == "huhhdu*hdh"
    d = DyckWord("uuuuudduudddduuduudddd")
    assert rs_array(d).columns[6] == (4, 2)
    assert l_statistic(d) == 15


@pytest.mark.parametrize("n", range(1, 9))
def test_star_word_is_bijective(n):
    seen = set()
    for d in oracle.enum_dyck(n):
        star = bj.to_star_word(d)
        assert len(star) == n - 1
        assert bj.from_star_word(star) == d
        seen.add(star.letters)
    assert len(seen) == sum(1 for _ in oracle.enum_dyck(n))


def test_ballot_split_and_join():
    pair = bj.split_ballot("uhuhhdhhdudud", 3, 4)
    assert (pair.p_r.steps, pair.p_s.steps) == ("uhdudud", "uhhdhh")
    assert bj.join_ballot(pair).steps == "uhuhhdhhdudud"


def test_ballot_precondition():
    with pytest.raises(BallotPreconditionViolated):
        bj.split_ballot("uhuhhdhhdudud", 2, 2)
    with pytest.raises(BallotPreconditionViolated):
        bj.join_ballot(bj.BallotPair("ud", "uhhdhh", 3, 4))


def test_two_return_worked_example():
    star = bj.rs_two_returns_star_word("uhuhhdhhdudud", 3, 4)
    assert star.letters == "ududuhd*uhhdhh"
    d = bj.rs_two_returns_forward("uhuhhdhhdudud", 3, 4)
    assert d.steps == "uuduudduuudduddduuuuduuudddddd"
    assert returns(d) == 2
    p, r, s = bj.rs_two_returns_inverse(d)
    assert (p.steps, r, s) == ("uhuhhdhhdudud", 3, 4)


def test_two_return_inverse_rejects_wrong_inputs():
    with pytest.raises(WrongStarCount):
        bj.rs_two_returns_inverse("ududud")
    with pytest.raises(DomainError):
        # one star but a single return
        bj.rs_two_returns_inverse(bj.from_star_word("u*hhd"))


def test_one_return_bounds_on_j():
    with pytest.raises(IndexOutOfRange):
        bj.rs_one_return_forward("hh", "", 4, 1, 1)
    with pytest.raises(IndexOutOfRange):
        bj.rs_one_return_forward("hh", "", 0, 1, 1)


def test_one_return_roundtrip_small():
    for j in (1, 2, 3):
        d = bj.rs_one_return_forward("hh", "", j, 1, 1)
        assert returns(d) == 1 and l_statistic(d) == 2
        m, p, jj, r, s = bj.rs_one_return_inverse(d)
        assert (m.steps, p.steps, jj, r, s) == ("hh", "", j, 1, 1)


def test_star_positions_worked_examples():
    ctx = star_context("uh*uudd*hd")
    assert [(c.position, c.ups, c.downs) for c in ctx] == [(3, 1, 0), (8, 3, 2)]
    (c,) = star_context("huhhdu*hdh")
    assert (c.position, c.ups, c.downs) == (7, 2, 1)


def test_dm_check():
    assert bj.dm_check("uh*uudd*hd")
    assert bj.dm_check("**")
    with pytest.raises(WrongStarCount):
        bj.dm_check("u*d")


@pytest.mark.parametrize("n", range(3, 9))
def test_dm_check_characterizes_two_star_l4(n):
    for d in oracle.enum_dyck(n):
        star = bj.to_star_word(d)
        if star.star_count == 2:
            assert bj.dm_check(star) == (l_statistic(d) == 4)


@pytest.mark.parametrize(
    "build, args, star",
    [
        (bj.l4_type1_star_word, ("hudh", 2, 5), "uh*uudd*hd"),
        (bj.l4_type1_star_word, ("hudh", 2, 4), "uuh*u*ddhd"),
        (bj.l4_type2_star_word, ("huudhd",), "u*huu*dhdd"),
        (bj.l4_type3_star_word, ("ud", "hh", 1), "uu*hhdu*dd"),
        (bj.l4_type4_star_word, ("ud", "hh", 1), "u*uhhd*udd"),
    ],
)
def test_l4_worked_examples(build, args, star):
    assert build(*args).letters == star
    assert l_statistic(bj.from_star_word(star)) == 4


def test_l4_inverses_on_worked_examples():
    assert bj.l4_type1_inverse(bj.from_star_word("uh*uudd*hd"))[0].steps == "hudh"
    m, j1, j2 = bj.l4_type1_inverse(bj.from_star_word("uuh*u*ddhd"))
    assert (m.steps, j1, j2) == ("hudh", 2, 4)
    assert bj.l4_type2_inverse(bj.from_star_word("u*huu*dhdd")).steps == "huudhd"
    m, p, j = bj.l4_type3_inverse(bj.from_star_word("uu*hhdu*dd"))
    assert (m.steps, p.steps, j) == ("ud", "hh", 1)
    m, p, j = bj.l4_type4_inverse(bj.from_star_word("u*uhhd*udd"))
    assert (m.steps, p.steps, j) == ("ud", "hh", 1)


def test_l4_type_classification_and_singleton():
    assert bj.l4_type("ududud") == 4
    assert bj.l4_type4_inverse("ududud") is None
    with pytest.raises(DomainError):
        bj.l4_type("uuuddd")
    with pytest.raises(DomainError):
        bj.l4_type1_inverse(bj.from_star_word("u*huu*dhdd"))


def test_l4_type1_index_guard():
    with pytest.raises(IndexOutOfRange):
        bj.l4_type1_forward("hudh", 3, 3)
    with pytest.raises(IndexOutOfRange):
        bj.l4_type1_forward("hudh", 1, 7)


def test_insert_helpers():
    assert bj.insert_before_nth("hdhd", "d", 2, "X") == "hdhXd"
    assert bj.insert_before_nth("hd", "d", 5, "X") == "hdX"
    assert bj.insert_after_nth("uhu", "u", 0, "X") == "Xuhu"
    assert bj.insert_after_nth("uhu", "u", 1, "X") == "uXhu"
