"""Lattice words and the r-s array statistic on Dyck paths.

Words are stored as lowercase strings:
``u``/``d`` for Dyck words, ``u``/``d``/``h`` for Motzkin words, plus ``*``
for star words and ``x``/``y``/``z`` for 3-dimensional Catalan words.
All positions reported to callers are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod
from typing import NamedTuple, Union

from .errors import InvalidCharacter, PrefixViolation, UnbalancedWord

UP, DOWN, FLAT, STAR = "u", "d", "h", "*"

ALPHABETS = {
    "dyck": frozenset("ud"),
    "motzkin": frozenset("udh"),
    "star": frozenset("udh*"),
    "catalan": frozenset("xyz"),
}


def _check_letters(steps: str, kind: str) -> None:
    allowed = ALPHABETS[kind]
    for pos, ch in enumerate(steps, 1):
        if ch not in allowed:
            raise InvalidCharacter(
                f"{ch!r} at position {pos} is not a {kind} letter "
                f"({''.join(sorted(allowed))})"
            )


def _check_balanced(steps: str, kind: str) -> None:
    height = 0
    for pos, ch in enumerate(steps, 1):
        if ch == UP:
            height += 1
        elif ch == DOWN:
            height -= 1
            if height < 0:
                raise PrefixViolation(f"{kind} word {steps!r} dips below the axis at position {pos}")
    if height != 0:
        raise UnbalancedWord(f"{kind} word {steps!r} ends at height {height}")


@dataclass(frozen=True)
class DyckWord:
    steps: str

    def __post_init__(self):
        _check_letters(self.steps, "dyck")
        _check_balanced(self.steps, "Dyck")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class MotzkinWord:
    steps: str

    def __post_init__(self):
        _check_letters(self.steps, "motzkin")
        _check_balanced(self.steps, "Motzkin")

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)


@dataclass(frozen=True)
class StarWord:
    """Modified Motzkin word: a Motzkin word once every ``*`` is deleted."""

    letters: str

    def __post_init__(self):
        _check_letters(self.letters, "star")
        _check_balanced(self.letters, "star")

    @property
    def star_count(self) -> int:
        return self.letters.count(STAR)

    def __str__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)


@dataclass(frozen=True)
class CatalanWord:
    """Word over x, y, z whose every prefix has #x >= #y >= #z."""

    letters: str

    def __post_init__(self):
        _check_letters(self.letters, "catalan")
        nx = ny = nz = 0
        for pos, ch in enumerate(self.letters, 1):
            if ch == "x":
                nx += 1
            elif ch == "y":
                ny += 1
            else:
                nz += 1
            if not nx >= ny >= nz:
                raise PrefixViolation(
                    f"Catalan word {self.letters!r} breaks x >= y >= z at position {pos}"
                )
        if not nx == ny == nz:
            raise UnbalancedWord(f"Catalan word {self.letters!r} has counts ({nx}, {ny}, {nz})")

    @property
    def size(self) -> int:
        return len(self.letters) // 3

    def __str__(self):
        return self.letters

    def __len__(self):
        return len(self.letters)


AnyWord = Union[DyckWord, MotzkinWord, StarWord, CatalanWord]

_CONSTRUCTORS = {
    "dyck": DyckWord,
    "motzkin": MotzkinWord,
    "star": StarWord,
    "catalan": CatalanWord,
}


def parse_word(text: str, alphabet: str) -> AnyWord:
    """Parse ``text`` as a word of the named alphabet and validate it."""
    try:
        cls = _CONSTRUCTORS[alphabet]
    except KeyError:
        raise ValueError(f"unknown alphabet {alphabet!r}; expected one of {sorted(_CONSTRUCTORS)}") from None
    return cls(text)


def render(word: AnyWord) -> str:
    return str(word)


def _dyck(word) -> DyckWord:
    return word if isinstance(word, DyckWord) else DyckWord(word)


def _motzkin(word) -> MotzkinWord:
    return word if isinstance(word, MotzkinWord) else MotzkinWord(word)


def _star(word) -> StarWord:
    return word if isinstance(word, StarWord) else StarWord(word)


class AscDesc(NamedTuple):
    asc: tuple[int, ...]
    des: tuple[int, ...]


class RSArray(NamedTuple):
    r: tuple[int, ...]
    s: tuple[int, ...]

    @property
    def columns(self) -> list[tuple[int, int]]:
        return list(zip(self.r, self.s))


class Star(NamedTuple):
    position: int
    ups: int
    downs: int


def asc_desc(word: DyckWord | str) -> AscDesc:
    """Cumulative ascent and descent run lengths of a Dyck word."""
    steps = _dyck(word).steps
    asc, des = [], []
    ups = downs = 0
    prev = None
    for ch in steps:
        if ch == UP:
            ups += 1
            if prev == DOWN:
                des.append(downs)
        else:
            downs += 1
            if prev == UP:
                asc.append(ups)
        prev = ch
    if steps:
        des.append(downs)
    return AscDesc(tuple(asc), tuple(des))


def from_asc_desc(asc, des) -> DyckWord:
    """Inverse of :func:`asc_desc`."""
    asc, des = tuple(asc), tuple(des)
    if len(asc) != len(des):
        raise ValueError("ascent and descent sequences differ in length")
    parts = []
    a_prev = b_prev = 0
    for a, b in zip(asc, des):
        if a <= a_prev or b <= b_prev or a < b:
            raise ValueError(f"invalid ascent/descent pair {asc}, {des}")
        parts.append(UP * (a - a_prev) + DOWN * (b - b_prev))
        a_prev, b_prev = a, b
    if asc and asc[-1] != des[-1]:
        raise ValueError("ascent and descent sequences end at different values")
    return DyckWord("".join(parts))


def rs_array(word: DyckWord | str) -> RSArray:
    """The n-1 columns (r_k, s_k) of a Dyck word of semilength n."""
    d = _dyck(word)
    n = d.semilength
    asc, des = asc_desc(d)
    r = [0] * max(n - 1, 0)
    s = [0] * max(n - 1, 0)
    for i, a in enumerate(asc):
        if a < n:
            r[a - 1] = des[i] - (des[i - 1] if i else 0)
    for i, b in enumerate(des):
        if b < n:
            s[b - 1] = asc[i + 1] - asc[i]
    return RSArray(tuple(r), tuple(s))


def l_statistic(word: DyckWord | str) -> int:
    """Product of C(r_k + s_k, r_k) over every column of the r-s array."""
    r, s = rs_array(word)
    return prod(comb(a + b, a) for a, b in zip(r, s))


def returns(word: DyckWord | str) -> int:
    """Number of down steps landing on the x-axis."""
    height = 0
    count = 0
    for ch in _dyck(word).steps:
        height += 1 if ch == UP else -1
        if height == 0:
            count += 1
    return count


_SWAP = str.maketrans("ud", "du")


def reverse_motzkin(word: MotzkinWord | str) -> MotzkinWord:
    return MotzkinWord(_motzkin(word).steps[::-1].translate(_SWAP))


def star_context(word: StarWord | str) -> list[Star]:
    """Position and the number of ups/downs strictly before each star."""
    stars = []
    ups = downs = 0
    for pos, ch in enumerate(_star(word).letters, 1):
        if ch == STAR:
            stars.append(Star(pos, ups, downs))
        elif ch == UP:
            ups += 1
        elif ch == DOWN:
            downs += 1
    return stars
