"""Constructive bijections between Dyck paths and (modified) Motzkin words.

Every forward map builds a star word and converts it with
:func:`from_star_word`; every inverse starts from :func:`to_star_word`.
Inverses check that their argument lies in the declared domain and raise
:class:`~dyckstat.errors.DomainError` subclasses otherwise.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import BallotPreconditionViolated, DomainError, IndexOutOfRange, WrongStarCount
from .words import (
    DOWN,
    FLAT,
    STAR,
    UP,
    DyckWord,
    MotzkinWord,
    StarWord,
    from_asc_desc,
    returns,
    reverse_motzkin,
    rs_array,
    star_context,
)

UP_OR_STAR = frozenset((UP, STAR))
DOWN_OR_STAR = frozenset((DOWN, STAR))


def _text(word) -> str:
    return word if isinstance(word, str) else str(word)


# -- positional primitives ---------------------------------------------------


def nth_index(word: str, letters, k: int) -> int | None:
    """0-based index of the k-th (1-based) letter of ``word`` in ``letters``."""
    if k < 1:
        return None
    seen = 0
    for idx, ch in enumerate(word):
        if ch in letters:
            seen += 1
            if seen == k:
                return idx
    return None


def insert_before_nth(word: str, letters, k: int, piece: str) -> str:
    """Insert ``piece`` before the k-th occurrence, or at the end if there is none."""
    idx = nth_index(word, letters, k)
    if idx is None:
        idx = len(word)
    return word[:idx] + piece + word[idx:]


def insert_after_nth(word: str, letters, k: int, piece: str) -> str:
    """Insert ``piece`` after the k-th occurrence; k = 0 means at the beginning."""
    if k == 0:
        return piece + word
    idx = nth_index(word, letters, k)
    if idx is None:
        raise IndexOutOfRange(f"{word!r} has fewer than {k} occurrences of {sorted(letters)}")
    return word[: idx + 1] + piece + word[idx + 1 :]


def _delete_indices(word: str, indices) -> str:
    drop = set(indices)
    return "".join(ch for i, ch in enumerate(word) if i not in drop)


def _nth_required(word: str, letters, k: int) -> int:
    idx = nth_index(word, letters, k)
    if idx is None:
        raise DomainError(f"{word!r} has no occurrence #{k} of {sorted(letters)}")
    return idx


def maximal_motzkin_from(word: str, start: int) -> str:
    """Longest Motzkin factor of ``word`` beginning at 0-based ``start``."""
    height = 0
    best = start
    for idx in range(start, len(word)):
        ch = word[idx]
        if ch == STAR:
            break
        height += 1 if ch == UP else -1 if ch == DOWN else 0
        if height < 0:
            break
        if height == 0:
            best = idx + 1
    return word[start:best]


def maximal_motzkin_ending(word: str, end: int) -> str:
    """Longest Motzkin factor of ``word`` ending just before 0-based ``end``."""
    depth = 0
    best = end
    for idx in range(end - 1, -1, -1):
        ch = word[idx]
        if ch == STAR:
            break
        depth += 1 if ch == DOWN else -1 if ch == UP else 0
        if depth < 0:
            break
        if depth == 0:
            best = idx
    return word[best:end]


def first_down(word) -> int | None:
    """1-based position of the first down step, or None."""
    idx = _text(word).find(DOWN)
    return None if idx < 0 else idx + 1


def in_ballot_class(word, k: int) -> bool:
    """Membership in T_{len, k}: first down at k, or the path is h^{k-1}."""
    w = _text(word)
    pos = first_down(w)
    if pos is None:
        return w == FLAT * (k - 1)
    return pos == k


# -- the star-word correspondence --------------------------------------------


def to_star_word(word: DyckWord | str) -> StarWord:
    """Letter k is *, u, d or h according to which of r_k, s_k are nonzero."""
    r, s = rs_array(word)
    letters = []
    for rk, sk in zip(r, s):
        if rk and sk:
            letters.append(STAR)
        elif sk:
            letters.append(UP)
        elif rk:
            letters.append(DOWN)
        else:
            letters.append(FLAT)
    return StarWord("".join(letters))


def from_star_word(word: StarWord | str) -> DyckWord:
    """The Dyck path of semilength len(word)+1 whose star word is ``word``."""
    w = _text(word) if isinstance(word, StarWord) else StarWord(word).letters
    n = len(w) + 1
    asc = [i for i, ch in enumerate(w, 1) if ch in DOWN_OR_STAR] + [n]
    des = [i for i, ch in enumerate(w, 1) if ch in UP_OR_STAR] + [n]
    assert all(a >= b for a, b in zip(asc, des)), (w, asc, des)
    return from_asc_desc(asc, des)


def _star_columns(d: DyckWord) -> tuple[str, list[tuple[int, int]]]:
    w = to_star_word(d).letters
    r, s = rs_array(d)
    cols = [(r[i], s[i]) for i, ch in enumerate(w) if ch == STAR]
    return w, cols


# -- ballot decomposition ------------------------------------------------------


class BallotPair(NamedTuple):
    p_r: MotzkinWord
    p_s: MotzkinWord
    r: int
    s: int


def split_ballot(path: MotzkinWord | str, r: int, s: int) -> BallotPair:
    """Cut P in T_{n, r+s-1} into P_r in T_{l, r} and P_s in T_{n-l, s}.

    P_s is the maximal Motzkin factor starting at entry r; P_r is what is left.
    """
    if r < 1 or s < 1:
        raise BallotPreconditionViolated("r and s must be positive")
    p = MotzkinWord(_text(path)).steps
    if not in_ballot_class(p, r + s - 1):
        raise BallotPreconditionViolated(
            f"{p!r} is not in T_(n,{r + s - 1}): first down at {first_down(p)}"
        )
    p_s = maximal_motzkin_from(p, r - 1)
    p_r = p[: r - 1] + p[r - 1 + len(p_s) :]
    return BallotPair(MotzkinWord(p_r), MotzkinWord(p_s), r, s)


def join_ballot(pair: BallotPair) -> MotzkinWord:
    """Insert P_s after the (r-1)st letter of P_r."""
    p_r, p_s = _text(pair.p_r), _text(pair.p_s)
    if not in_ballot_class(p_r, pair.r) or not in_ballot_class(p_s, pair.s):
        raise BallotPreconditionViolated(f"({p_r!r}, {p_s!r}) is not a ballot pair for r={pair.r}, s={pair.s}")
    return MotzkinWord(p_r[: pair.r - 1] + p_s + p_r[pair.r - 1 :])


# -- D_n^{r,s}: one star --------------------------------------------------------


def rs_two_returns_star_word(path, r: int, s: int) -> StarWord:
    pair = split_ballot(path, r, s)
    return StarWord(reverse_motzkin(pair.p_r).steps + STAR + pair.p_s.steps)


def rs_two_returns_forward(path: MotzkinWord | str, r: int, s: int) -> DyckWord:
    """P in T_{n-2, r+s-1} -> D in D_n^{r,s} with exactly two returns."""
    return from_star_word(rs_two_returns_star_word(path, r, s))


def _single_star(d: DyckWord) -> tuple[str, int, int, int]:
    w, cols = _star_columns(d)
    if len(cols) != 1:
        raise WrongStarCount(f"{d} has {len(cols)} stars in its star word, expected 1")
    r, s = cols[0]
    return w, w.index(STAR), r, s


def rs_two_returns_inverse(word: DyckWord | str) -> tuple[MotzkinWord, int, int]:
    """Recover (P, r, s) from a two-return path with one star."""
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    w, k, r, s = _single_star(d)
    if returns(d) != 2:
        raise DomainError(f"{d} has {returns(d)} returns, expected 2")
    m_r, m_s = w[:k], w[k + 1 :]
    p = join_ballot(BallotPair(reverse_motzkin(m_r), MotzkinWord(m_s), r, s))
    return p, r, s


def rs_one_return_star_word(motzkin, path, j: int, r: int, s: int) -> StarWord:
    m = MotzkinWord(_text(motzkin)).steps
    if not 1 <= j <= len(m) + 1:
        raise IndexOutOfRange(f"j={j} outside 1..{len(m) + 1}")
    pair = split_ballot(path, r, s)
    bar = m[: j - 1] + STAR + m[j - 1 :]
    star = star_context(bar)[0]
    w = insert_before_nth(bar, DOWN, star.ups + 1, DOWN + pair.p_s.steps)
    w = insert_after_nth(w, UP, star.downs, reverse_motzkin(pair.p_r).steps + UP)
    return StarWord(w)


def rs_one_return_forward(motzkin: MotzkinWord | str, path: MotzkinWord | str, j: int, r: int, s: int) -> DyckWord:
    """(M, P, j) -> D in D_n^{r,s} with a single return, n = |M| + |P| + 4."""
    return from_star_word(rs_one_return_star_word(motzkin, path, j, r, s))


def rs_one_return_inverse(word: DyckWord | str) -> tuple[MotzkinWord, MotzkinWord, int, int, int]:
    """Recover (M, P, j, r, s) from a one-return path with one star."""
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    w, k, r, s = _single_star(d)
    if returns(d) != 1:
        raise DomainError(f"{d} has {returns(d)} returns, expected 1")
    star = star_context(w)[0]
    x, y = star.ups, star.downs
    bold_d = _nth_required(w, DOWN_OR_STAR, x + 1)
    p1 = maximal_motzkin_from(w, bold_d + 1)
    bold_u = _nth_required(w, UP, y + 1)
    p2 = maximal_motzkin_ending(w, bold_u)
    drop = list(range(bold_u - len(p2), bold_u + 1)) + list(range(bold_d, bold_d + 1 + len(p1)))
    bar = _delete_indices(w, drop)
    j = bar.index(STAR) + 1
    m = MotzkinWord(bar.replace(STAR, ""))
    p = join_ballot(BallotPair(reverse_motzkin(p2), MotzkinWord(p1), r, s))
    return m, p, j, r, s


# -- L = 4 with two stars --------------------------------------------------------


def _followed_by(w: str, idx: int | None, letters) -> bool:
    return idx is not None and idx + 1 < len(w) and w[idx + 1] in letters


def dm_check(word: StarWord | str) -> bool:
    """Whether both star columns of the corresponding path are (1, 1)."""
    w = _text(word) if isinstance(word, StarWord) else StarWord(word).letters
    stars = star_context(w)
    if len(stars) != 2:
        raise WrongStarCount(f"{w!r} has {len(stars)} stars, expected 2")
    (_, x1, y1), (_, x2, y2) = stars
    n_down = w.count(DOWN)
    first = _followed_by(w, nth_index(w, DOWN_OR_STAR, x1 + 1), DOWN_OR_STAR)
    second = _followed_by(w, nth_index(w, DOWN_OR_STAR, x2 + 2), DOWN_OR_STAR) or (
        x2 == n_down and w[-1] in DOWN_OR_STAR
    )
    if y1 == 0:
        third = w[0] in UP_OR_STAR
    else:
        third = _followed_by(w, nth_index(w, UP_OR_STAR, y1), UP_OR_STAR)
    fourth = _followed_by(w, nth_index(w, UP_OR_STAR, y2 + 1), UP_OR_STAR)
    return first and second and third and fourth


L4_TYPE4_SINGLETON = DyckWord("ududud")


def l4_type(word: DyckWord | str) -> int:
    """Which of the four x_1-versus-y_2 cases a two-star L=4 path falls in."""
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    w, cols = _star_columns(d)
    if len(cols) != 2 or any(c != (1, 1) for c in cols):
        raise DomainError(f"{d} is not an L=4 path with two stars")
    (_, x1, _), (_, _, y2) = star_context(w)
    if x1 == y2:
        return 4
    if x1 == y2 + 1:
        return 2 if x1 == 1 else 3
    return 1


def _l4_context(d: DyckWord, expected_type: int) -> tuple[str, int, int, int, int]:
    kind = l4_type(d)
    if kind != expected_type:
        raise DomainError(f"{d} is a type-{kind} L=4 path, expected type {expected_type}")
    w = to_star_word(d).letters
    (_, x1, y1), (_, x2, y2) = star_context(w)
    return w, x1, y1, x2, y2


def l4_type1_star_word(motzkin, j1: int, j2: int) -> StarWord:
    m = MotzkinWord(_text(motzkin)).steps
    if not 1 <= j1 < j2 <= len(m) + 2:
        raise IndexOutOfRange(f"need 1 <= j1 < j2 <= {len(m) + 2}, got ({j1}, {j2})")
    bar = list(m)
    bar.insert(j1 - 1, STAR)
    bar.insert(j2 - 1, STAR)
    w = "".join(bar)
    (_, x1, y1), (_, x2, y2) = star_context(w)
    w = insert_before_nth(w, DOWN, x2 + 1, DOWN)
    w = insert_before_nth(w, DOWN, x1 + 1, DOWN)
    w = insert_after_nth(w, UP, y2, UP)
    w = insert_after_nth(w, UP, y1, UP)
    return StarWord(w)


def l4_type1_forward(motzkin: MotzkinWord | str, j1: int, j2: int) -> DyckWord:
    """(M, j1, j2) -> path with x_1 not in {y_2, y_2 + 1}; n = |M| + 7."""
    return from_star_word(l4_type1_star_word(motzkin, j1, j2))


def l4_type1_inverse(word: DyckWord | str) -> tuple[MotzkinWord, int, int]:
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    w, x1, y1, x2, y2 = _l4_context(d, 1)
    if x1 < y2:
        downs, ups = (x1, x2), (y1 + 1, y2 + 1)
    else:
        downs, ups = (x1 - 1, x2), (y1 + 1, y2 + 2)
    drop = [_nth_required(w, DOWN, k) for k in downs] + [_nth_required(w, UP, k) for k in ups]
    bar = _delete_indices(w, drop)
    j1, j2 = (i + 1 for i, ch in enumerate(bar) if ch == STAR)
    return MotzkinWord(bar.replace(STAR, "")), j1, j2


def l4_type2_star_word(motzkin) -> StarWord:
    m = MotzkinWord(_text(motzkin)).steps
    first = m.find(DOWN)
    x_bar = m[: first if first >= 0 else len(m)].count(UP)
    w = insert_before_nth(m, DOWN, x_bar + 1, DOWN)
    w = insert_before_nth(w, DOWN, 1, STAR)
    return StarWord(UP + STAR + w)


def l4_type2_forward(motzkin: MotzkinWord | str) -> DyckWord:
    """M -> the path with x_1 = 1, y_2 = 0; n = |M| + 5."""
    return from_star_word(l4_type2_star_word(motzkin))


def l4_type2_inverse(word: DyckWord | str) -> MotzkinWord:
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    w, x1, y1, x2, y2 = _l4_context(d, 2)
    drop = [_nth_required(w, DOWN, x2), _nth_required(w, UP, 1)]
    return MotzkinWord(_delete_indices(w, drop).replace(STAR, ""))


def _check_block_args(m: str, j: int) -> None:
    if not 1 <= j <= len(m) + 1:
        raise IndexOutOfRange(f"j={j} outside 1..{len(m) + 1}")


def l4_type3_star_word(motzkin, path, j: int) -> StarWord:
    m = MotzkinWord(_text(motzkin)).steps
    p = MotzkinWord(_text(path)).steps
    _check_block_args(m, j)
    w = m[: j - 1] + UP + STAR + p + DOWN + m[j - 1 :]
    (_, x1, y1), = star_context(w)
    w = insert_before_nth(w, DOWN, x1 + 1, STAR)
    x2 = star_context(w)[1].ups
    w = insert_after_nth(w, UP, y1, UP)
    w = insert_before_nth(w, DOWN, x2 + 1, DOWN)
    return StarWord(w)


def l4_type3_forward(motzkin: MotzkinWord | str, path: MotzkinWord | str, j: int) -> DyckWord:
    """(M, P, j) -> path with x_1 = y_2 + 1 >= 2; n = |M| + |P| + 7."""
    return from_star_word(l4_type3_star_word(motzkin, path, j))


def _strip_second_star(w: str, x2: int, y1: int) -> str:
    second = [i for i, ch in enumerate(w) if ch == STAR][1]
    drop = [_nth_required(w, DOWN, x2), second, _nth_required(w, UP, y1 + 1)]
    return _delete_indices(w, drop)


def l4_type3_inverse(word: DyckWord | str) -> tuple[MotzkinWord, MotzkinWord, int]:
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    w, x1, y1, x2, y2 = _l4_context(d, 3)
    bar = _strip_second_star(w, x2, y1)
    k = bar.index(STAR)
    p = maximal_motzkin_from(bar, k + 1)
    end = k + 1 + len(p)
    if k == 0 or bar[k - 1] != UP or end >= len(bar) or bar[end] != DOWN:
        raise DomainError(f"{d} does not carry the u*Pd block")
    m = bar[: k - 1] + bar[end + 1 :]
    return MotzkinWord(m), MotzkinWord(p), k


def l4_type4_star_word(motzkin, path, j: int) -> StarWord:
    m = MotzkinWord(_text(motzkin)).steps
    p = MotzkinWord(_text(path)).steps
    _check_block_args(m, j)
    w = m[: j - 1] + STAR + UP + p + DOWN + m[j - 1 :]
    (_, x1, y1), = star_context(w)
    w = insert_after_nth(w, DOWN, x1 + 1, STAR)
    x2 = star_context(w)[1].ups
    w = insert_after_nth(w, UP, y1, UP)
    w = insert_before_nth(w, DOWN, x2 + 1, DOWN)
    return StarWord(w)


def l4_type4_forward(motzkin: MotzkinWord | str, path: MotzkinWord | str, j: int) -> DyckWord:
    """(M, P, j) -> path with x_1 = y_2; n = |M| + |P| + 7.

    The semilength-3 path ``ududud`` (star word ``**``) is the one member of
    this class outside the parameterization; see :data:`L4_TYPE4_SINGLETON`.
    """
    return from_star_word(l4_type4_star_word(motzkin, path, j))


def l4_type4_inverse(word: DyckWord | str) -> tuple[MotzkinWord, MotzkinWord, int] | None:
    """Recover (M, P, j); returns None for the singleton ``ududud``."""
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    w, x1, y1, x2, y2 = _l4_context(d, 4)
    if w == STAR * 2:
        return None
    bar = _strip_second_star(w, x2, y1)
    k = bar.index(STAR)
    if k + 1 >= len(bar) or bar[k + 1] != UP:
        raise DomainError(f"{d} does not carry the *uPd block")
    p = maximal_motzkin_from(bar, k + 2)
    end = k + 2 + len(p)
    if end >= len(bar) or bar[end] != DOWN:
        raise DomainError(f"{d} does not carry the *uPd block")
    m = bar[:k] + bar[end + 1 :]
    return MotzkinWord(m), MotzkinWord(p), k + 1
