"""Brute-force enumeration used to check every closed form.

Nothing in here relies on the star-word machinery except
:func:`star_signature`, which reads binomial factors straight off the r-s
array. Every enumerator refuses sizes above a configurable bound rather than
silently truncating. Bounds can be raised with the ``DYCKSTAT_MAX_DYCK_N``,
``DYCKSTAT_MAX_CATALAN_N`` and ``DYCKSTAT_MAX_PERM_M`` environment variables.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Iterator, NamedTuple

from .errors import OracleBoundExceeded
from .words import CatalanWord, DyckWord, MotzkinWord, returns, rs_array

DEFAULT_MAX_DYCK_N = 14
DEFAULT_MAX_CATALAN_N = 6
DEFAULT_MAX_PERM_M = 9


_overrides: dict[str, int] = {}


def set_bounds(dyck: int | None = None, catalan: int | None = None, perm: int | None = None) -> None:
    """Process-wide bounds that take precedence over the environment."""
    for env, value in (
        ("DYCKSTAT_MAX_DYCK_N", dyck),
        ("DYCKSTAT_MAX_CATALAN_N", catalan),
        ("DYCKSTAT_MAX_PERM_M", perm),
    ):
        if value is None:
            _overrides.pop(env, None)
        else:
            _overrides[env] = value


def _bound(explicit: int | None, env: str, default: int) -> int:
    if explicit is not None:
        return explicit
    if env in _overrides:
        return _overrides[env]
    raw = os.environ.get(env)
    return int(raw) if raw else default


def max_dyck_n(explicit=None) -> int:
    return _bound(explicit, "DYCKSTAT_MAX_DYCK_N", DEFAULT_MAX_DYCK_N)


def max_catalan_n(explicit=None) -> int:
    return _bound(explicit, "DYCKSTAT_MAX_CATALAN_N", DEFAULT_MAX_CATALAN_N)


def max_perm_m(explicit=None) -> int:
    return _bound(explicit, "DYCKSTAT_MAX_PERM_M", DEFAULT_MAX_PERM_M)


def _require(value: int, limit: int, what: str) -> None:
    if value > limit:
        raise OracleBoundExceeded(f"{what}={value} exceeds the brute-force bound {limit}")


# -- Dyck and Motzkin words --------------------------------------------------


def _dyck_strings(n: int, prefix: str = "", ups: int = 0, downs: int = 0) -> Iterator[str]:
    # u sorts before d, matching the order words are listed in by hand.
    stack = [(prefix, ups, downs)]
    while stack:
        word, u, d = stack.pop()
        if u == n and d == n:
            yield word
            continue
        if d < u:
            stack.append((word + "d", u, d + 1))
        if u < n:
            stack.append((word + "u", u + 1, d))


def enum_dyck(n: int, max_n: int | None = None) -> Iterator[DyckWord]:
    """All Dyck words of semilength n, u-before-d lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    _require(n, max_dyck_n(max_n), "n")
    for w in _dyck_strings(n):
        yield DyckWord(w)


def enum_motzkin(m: int) -> Iterator[MotzkinWord]:
    """All Motzkin words of length m in u < d < h order."""
    def rec(word: str, height: int):
        left = m - len(word)
        if left == 0:
            if height == 0:
                yield word
            return
        if height + 1 <= left - 1:
            yield from rec(word + "u", height + 1)
        if height > 0:
            yield from rec(word + "d", height - 1)
        if height <= left - 1:
            yield from rec(word + "h", height)

    for w in rec("", 0):
        yield MotzkinWord(w)


def enum_ballot(m: int, k: int) -> Iterator[MotzkinWord]:
    """Motzkin words of length m in T_{m,k}, by filtering all of M_m."""
    for w in enum_motzkin(m):
        s = w.steps
        first = s.find("d")
        if (first < 0 and s == "h" * (k - 1)) or first == k - 1:
            yield w


# -- per-path scan -------------------------------------------------------------


class PathStats(NamedTuple):
    word: str
    l_value: int
    returns: int
    signature: tuple[int, ...]


def star_signature(word: DyckWord | str) -> tuple[int, ...]:
    """Sorted binomial factors of the columns where r and s are both nonzero."""
    r, s = rs_array(word)
    return tuple(sorted(comb(a + b, a) for a, b in zip(r, s) if a and b))


def _scan_prefix(args) -> list[PathStats]:
    n, prefix, ups, downs = args
    out = []
    for w in _dyck_strings(n, prefix, ups, downs):
        r, s = rs_array(w)
        factors = [comb(a + b, a) for a, b in zip(r, s) if a and b]
        out.append(PathStats(w, prod(factors), returns(w), tuple(sorted(factors))))
    return out


def _prefixes(n: int, depth: int) -> list[tuple[int, str, int, int]]:
    """Valid Dyck prefixes of the given length, in enumeration order."""
    out = []

    def rec(word, u, d):
        if len(word) == depth or (u == n and d == n):
            out.append((n, word, u, d))
            return
        if u < n:
            rec(word + "u", u + 1, d)
        if d < u:
            rec(word + "d", u, d + 1)

    rec("", 0, 0)
    return out


def scan_paths(n: int, workers: int = 1, max_n: int | None = None) -> list[PathStats]:
    """(word, L, returns, star signature) for every D in D_n.

    The search space is split by prefix; results are concatenated in prefix
    order so the output is identical for any worker count.
    """
    _require(n, max_dyck_n(max_n), "n")
    if workers <= 1:
        return list(_scan_cached(n))
    tasks = _prefixes(n, min(2 * n, 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(_scan_prefix, tasks)
        return [stats for chunk in chunks for stats in chunk]


@lru_cache(maxsize=16)
def _scan_cached(n: int) -> tuple[PathStats, ...]:
    out = []
    for task in _prefixes(n, min(2 * n, 8)):
        out.extend(_scan_prefix(task))
    return tuple(out)


def l_histogram(n: int, workers: int = 1, max_n: int | None = None) -> dict[int, int]:
    """Number of D in D_n with each value of L, keys ascending."""
    counts = Counter(p.l_value for p in scan_paths(n, workers, max_n))
    return dict(sorted(counts.items()))


def joint_histogram(n: int, max_n: int | None = None) -> dict[tuple[int, int], int]:
    """Counts of (L, returns) pairs over D_n."""
    counts = Counter((p.l_value, p.returns) for p in scan_paths(n, max_n=max_n))
    return dict(sorted(counts.items()))


def filter_by_star_signature(n: int, signature, max_n: int | None = None) -> int:
    """Number of D in D_n whose star columns give exactly this multiset of binomials."""
    target = tuple(sorted(signature))
    return sum(1 for p in scan_paths(n, max_n=max_n) if p.signature == target)


def paths_with_star_columns(n: int, columns, max_n: int | None = None) -> list[DyckWord]:
    """D in D_n whose columns with r, s both nonzero are exactly ``columns`` (in order)."""
    target = tuple(tuple(c) for c in columns)
    out = []
    for p in scan_paths(n, max_n=max_n):
        if len(p.signature) != len(target):
            continue
        r, s = rs_array(p.word)
        cols = tuple((a, b) for a, b in zip(r, s) if a and b)
        if cols == target:
            out.append(DyckWord(p.word))
    return out


# -- Catalan words ---------------------------------------------------------------


def enum_catalan_words(n: int, max_n: int | None = None) -> Iterator[CatalanWord]:
    """All 3-dimensional Catalan words of length 3n in x < y < z order."""
    _require(n, max_catalan_n(max_n), "n")

    def rec(word, nx, ny, nz):
        if nz == n:
            yield word
            return
        if nx < n:
            yield from rec(word + "x", nx + 1, ny, nz)
        if ny < nx:
            yield from rec(word + "y", nx, ny + 1, nz)
        if nz < ny:
            yield from rec(word + "z", nx, ny, nz + 1)

    for w in rec("", 0, 0, 0):
        yield CatalanWord(w)


_XY = str.maketrans({"x": "u", "y": "d", "z": None})
_YZ = str.maketrans({"x": None, "y": "u", "z": "d"})


def projections(word: CatalanWord | str) -> tuple[str, str]:
    """(D_xy, D_yz) as u/d strings."""
    w = str(word)
    return w.translate(_XY), w.translate(_YZ)


@lru_cache(maxsize=8)
def _matching_table(n: int) -> dict[str, tuple[str, ...]]:
    table: dict[str, list[str]] = {}
    for c in enum_catalan_words(n, max_n=n):
        xy, yz = projections(c)
        if xy == yz:
            table.setdefault(xy, []).append(c.letters)
    return {k: tuple(v) for k, v in table.items()}


def catalan_words_matching(word: DyckWord | str, max_n: int | None = None) -> tuple[str, ...]:
    """Catalan words C with D_xy(C) = D_yz(C) = D."""
    d = word if isinstance(word, DyckWord) else DyckWord(word)
    n = d.semilength
    _require(n, max_catalan_n(max_n), "n")
    return _matching_table(n).get(d.steps, ())


def words_matching(word: DyckWord | str, max_n: int | None = None) -> int:
    return len(catalan_words_matching(word, max_n))


# -- 321-avoiding permutations made of 3-cycles ------------------------------------


def all_three_cycle_permutations(m: int) -> Iterator[tuple[int, ...]]:
    """Permutations of 1..m (one-line) whose cycles all have length 3."""
    if m % 3:
        return

    def rec(remaining: tuple[int, ...], perm: dict[int, int]):
        if not remaining:
            yield tuple(perm[i] for i in range(1, m + 1))
            return
        a, rest = remaining[0], remaining[1:]
        for b, c in combinations(rest, 2):
            left = tuple(v for v in rest if v != b and v != c)
            for p, q in ((b, c), (c, b)):
                perm[a], perm[p], perm[q] = p, q, a
                yield from rec(left, perm)

    yield from rec(tuple(range(1, m + 1)), {})


def cycle_type(perm) -> list[int]:
    seen = set()
    lengths = []
    for start in range(1, len(perm) + 1):
        if start in seen:
            continue
        length = 0
        i = start
        while i not in seen:
            seen.add(i)
            i = perm[i - 1]
            length += 1
        lengths.append(length)
    return sorted(lengths)


def avoids_321(perm) -> bool:
    n = len(perm)
    for j in range(1, n - 1):
        pj = perm[j]
        if any(perm[i] > pj for i in range(j)) and any(perm[k] < pj for k in range(j + 1, n)):
            return False
    return True


def enum_321_3cycle(m: int, max_m: int | None = None) -> int:
    """Number of 321-avoiding permutations of length m composed only of 3-cycles."""
    if m % 3:
        raise ValueError("length must be a multiple of 3")
    _require(m, max_perm_m(max_m), "m")
    return sum(1 for p in all_three_cycle_permutations(m) if avoids_321(p))
