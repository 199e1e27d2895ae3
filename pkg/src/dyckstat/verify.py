"""Verification suites shared by the command line and the test suite.

Each suite yields :class:`Check` records; nothing here raises on a failed
comparison, so a caller can report every mismatch at once.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from math import comb
from typing import NamedTuple

from . import bijections as bj
from . import counting, figures, oracle, series
from .words import MotzkinWord, asc_desc, l_statistic, returns, rs_array, star_context


class Check(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _eq(name: str, got, want) -> Check:
    ok = got == want
    return Check(name, ok, "" if ok else f"got {got!r}, expected {want!r}")


# -- bijection roundtrips --------------------------------------------------------


class RoundtripResult(NamedTuple):
    domain_size: int
    image_size: int
    target_size: int
    forward_inverse_ok: bool
    inverse_forward_ok: bool

    @property
    def ok(self) -> bool:
        return (
            self.forward_inverse_ok
            and self.inverse_forward_ok
            and self.domain_size == self.image_size == self.target_size
        )


def roundtrip(domain: Iterable, forward: Callable, inverse: Callable, target: Iterable) -> RoundtripResult:
    """Check a bijection between an explicit domain and an explicit target set.

    ``forward`` takes one domain element (a tuple of arguments) and returns a
    Dyck word; ``inverse`` maps a Dyck word back to a domain element.
    """
    domain = list(domain)
    images = [forward(*args) for args in domain]
    target_set = {str(d) for d in target}
    image_set = {str(d) for d in images}
    inv_ok = all(_norm(inverse(img)) == _norm(args) for img, args in zip(images, domain))
    fwd_ok = image_set == target_set and all(
        str(forward(*_as_args(inverse(d)))) == d for d in target_set
    )
    return RoundtripResult(len(domain), len(image_set), len(target_set), inv_ok, fwd_ok)


def _as_args(pre):
    return pre if isinstance(pre, tuple) else (pre,)


def _norm(value):
    value = _as_args(value)
    return tuple(str(v) if isinstance(v, MotzkinWord) else v for v in value)


def _rs_targets(n: int, r: int, s: int, hits: int) -> list[str]:
    return [d.steps for d in oracle.paths_with_star_columns(n, [(r, s)]) if returns(d) == hits]


def rs_two_returns_roundtrip(n: int, r: int, s: int) -> RoundtripResult:
    domain = [(p, r, s) for p in oracle.enum_ballot(n - 2, r + s - 1)] if n >= 2 else []
    return roundtrip(domain, bj.rs_two_returns_forward, bj.rs_two_returns_inverse, _rs_targets(n, r, s, 2))


def rs_one_return_domain(n: int, r: int, s: int):
    for i in range(0, n - 2 - s - r + 1):
        for m in oracle.enum_motzkin(i):
            for p in oracle.enum_ballot(n - 4 - i, r + s - 1):
                for j in range(1, i + 2):
                    yield (m, p, j, r, s)


def rs_one_return_roundtrip(n: int, r: int, s: int) -> RoundtripResult:
    return roundtrip(
        rs_one_return_domain(n, r, s), bj.rs_one_return_forward, bj.rs_one_return_inverse, _rs_targets(n, r, s, 1)
    )


def l4_targets(n: int, kind: int) -> list[str]:
    out = []
    for p in oracle.scan_paths(n):
        if p.signature == (2, 2) and bj.l4_type(p.word) == kind:
            out.append(p.word)
    return out


def l4_domain(n: int, kind: int):
    if kind == 1:
        for m in oracle.enum_motzkin(n - 7) if n >= 7 else ():
            for j1 in range(1, n - 4):
                for j2 in range(j1 + 1, n - 4):
                    yield (m, j1, j2)
    elif kind == 2:
        if n >= 5:
            for m in oracle.enum_motzkin(n - 5):
                yield (m,)
    else:
        for i in range(0, n - 6):
            for m in oracle.enum_motzkin(i):
                for p in oracle.enum_motzkin(n - 7 - i):
                    for j in range(1, i + 2):
                        yield (m, p, j)


_L4_MAPS = {
    1: (bj.l4_type1_forward, bj.l4_type1_inverse),
    2: (bj.l4_type2_forward, bj.l4_type2_inverse),
    3: (bj.l4_type3_forward, bj.l4_type3_inverse),
    4: (bj.l4_type4_forward, bj.l4_type4_inverse),
}


def l4_roundtrip(n: int, kind: int) -> RoundtripResult:
    forward, inverse = _L4_MAPS[kind]
    target = l4_targets(n, kind)
    if kind == 4 and n == 3:
        ok = target == [bj.L4_TYPE4_SINGLETON.steps] and inverse(target[0]) is None
        return RoundtripResult(1, 1, len(target), ok, ok)
    return roundtrip(l4_domain(n, kind), forward, inverse, target)


def l4_formula(n: int, kind: int) -> int:
    return {
        1: counting.l4_type1_count,
        2: counting.l4_type2_count,
        3: counting.l4_type3_count,
        4: counting.l4_type4_count,
    }[kind](n)


def suite_bijections(max_n: int = 10, max_rs: int = 5, max_l4_n: int | None = None) -> Iterator[Check]:
    max_l4_n = max_n if max_l4_n is None else max_l4_n
    for n in range(1, max_n + 1):
        star = [d.steps for d in oracle.enum_dyck(n)]
        ok = all(bj.from_star_word(bj.to_star_word(d)).steps == d for d in star)
        ok = ok and len({bj.to_star_word(d).letters for d in star}) == len(star)
        yield Check(f"star word roundtrip n={n}", ok)
    for n in range(2, max_n + 1):
        for total in range(2, max_rs + 1):
            for r in range(1, total):
                s = total - r
                two = rs_two_returns_roundtrip(n, r, s)
                yield Check(
                    f"two-return bijection n={n} r={r} s={s}",
                    two.ok and two.target_size == counting.count_rs_two_returns(n, r, s),
                    str(two),
                )
                one = rs_one_return_roundtrip(n, r, s)
                yield Check(
                    f"one-return bijection n={n} r={r} s={s}",
                    one.ok and one.target_size == counting.count_rs_one_return(n, r, s),
                    str(one),
                )
    for n in range(3, max_l4_n + 1):
        for kind in (1, 2, 3, 4):
            res = l4_roundtrip(n, kind)
            yield Check(
                f"L=4 type {kind} bijection n={n}",
                res.ok and res.target_size == l4_formula(n, kind),
                str(res),
            )


# -- figures -----------------------------------------------------------------------


def suite_figures() -> Iterator[Check]:
    for k, seq in figures.L_TABLE.items():
        got = tuple(counting.count_Lk(n, k) for n in range(k, k + len(seq)))
        yield _eq(f"table row L={k}", got, seq)

    for d, l_value, words in figures.CATALAN_WORDS_N3:
        yield _eq(f"L({d})", l_statistic(d), l_value)
        yield _eq(f"Catalan words over {d}", sorted(oracle.catalan_words_matching(d)), sorted(words))
    yield _eq("Catalan words n=2", tuple(w.letters for w in oracle.enum_catalan_words(2)), figures.CATALAN_WORDS_N2)

    d = figures.EXAMPLE_PATH
    yield _eq("example path Asc/Des", tuple(asc_desc(d)), (figures.EXAMPLE_ASC, figures.EXAMPLE_DES))
    yield _eq("example path r-s array", tuple(rs_array(d)), (figures.EXAMPLE_R, figures.EXAMPLE_S))
    yield _eq("example path L", l_statistic(d), figures.EXAMPLE_L)
    yield _eq("example path star word", bj.to_star_word(d).letters, figures.EXAMPLE_STAR_WORD)

    for corners, r, s, star in figures.L1_PATHS_N5:
        d = figures.corners_to_word(corners)
        yield _eq(f"L=1 row {star}", (tuple(rs_array(d)), bj.to_star_word(d).letters, l_statistic(d)), ((r, s), star, 1))
        yield _eq(f"L=1 row {star} inverse", bj.from_star_word(star), d)
    want = sorted(figures.corners_to_word(c).steps for c, *_ in figures.L1_PATHS_N5)
    got = sorted(d.steps for d in oracle.enum_dyck(5) if l_statistic(d) == 1)
    yield _eq("L=1 rows are all of D_5^1", got, want)

    for motz, star, asc, des, r, s, corners in figures.L2_PATHS_N6:
        d = figures.corners_to_word(corners)
        yield _eq(
            f"L=2 row {star}",
            (bj.from_star_word(star), tuple(asc_desc(d)), tuple(rs_array(d)), l_statistic(d)),
            (d, (asc, des), (r, s), 2),
        )
        yield _l2_motzkin_check(star, motz)
    want = sorted(figures.corners_to_word(row[-1]).steps for row in figures.L2_PATHS_N6)
    got = sorted(d.steps for d in oracle.enum_dyck(6) if l_statistic(d) == 2)
    yield _eq("L=2 rows are all of D_6^2", got, want)

    for j, bar, xb, yb, star in figures.ONE_RETURN_ROWS:
        built = bj.rs_one_return_star_word(figures.ONE_RETURN_M, figures.ONE_RETURN_P, j, 3, 4)
        ctx = star_context(bar)[0]
        d = bj.from_star_word(built)
        yield _eq(
            f"one-return row j={j}",
            (built.letters, (ctx.ups, ctx.downs), returns(d), l_statistic(d)),
            (star, (xb, yb), 1, comb(7, 3)),
        )


def _l2_motzkin_check(star: str, motz: str) -> Check:
    # The row's Motzkin word is the star word with the star and the single
    # inserted u/d pair removed; recover it through the one-return inverse.
    m, p, j, r, s = bj.rs_one_return_inverse(bj.from_star_word(star))
    return _eq(f"L=2 row {star} Motzkin word", (m.steps, p.steps, r, s), (motz, "", 1, 1))


# -- series and weighted sums---------------------------------------------------------


def suite_gf(order: int = 20) -> Iterator[Check]:
    m = series.motzkin_series(order)
    x = series.TruncatedSeries.x(order)
    yield _eq("m = 1 + x m + x^2 m^2", list(m), list(1 + x * m + x * x * m * m))
    l2 = series.gf_L2(order)
    yield _eq("L2 GF vs closed form", list(l2)[1:], [counting.count_L2(n) for n in range(1, order + 1)])
    for p in (3, 5, 7, 11, 13):
        gf = series.gf_Lp(p, order)
        yield _eq(f"Lp GF p={p}", list(gf)[1:], [counting.count_Lp(n, p) for n in range(1, order + 1)])
    for total in range(2, 8):
        for r in range(1, total):
            gf = series.gf_rs(r, total - r, order)
            yield _eq(
                f"rs GF r={r} s={total - r}",
                list(gf)[1:],
                [counting.count_rs(n, r, total - r) for n in range(1, order + 1)],
            )
    for k in range(1, 8):
        gf = series.ballot_gf(k, order)
        yield _eq(f"ballot GF k={k}", list(gf), [series.ballot_number(n, k) for n in range(order + 1)])


def suite_eq1(max_n: int = 3) -> Iterator[Check]:
    for n in range(1, max_n + 1):
        yield _eq(f"321-avoiding 3-cycle permutations n={n}", oracle.enum_321_3cycle(3 * n), counting.weighted_sum_eq1(n))


def suite_oracle(max_n: int = 12) -> Iterator[Check]:
    """Exhaustive histogram against every closed form, n = 1..max_n."""
    for n in range(1, max_n + 1):
        hist = oracle.l_histogram(n)
        yield _eq(f"histogram total n={n}", sum(hist.values()), comb(2 * n, n) // (n + 1))
        closed = {1: counting.count_L1(n), 2: counting.count_L2(n), 4: counting.count_L4(n), 6: counting.count_L6(n)}
        for p in (3, 5, 7, 11, 13, 17, 19, 23):
            closed[p] = counting.count_Lp(n, p)
        for k, value in closed.items():
            yield _eq(f"|D_{n}^{k}| closed form vs histogram", value, hist.get(k, 0))


SUITES = {
    "figures": suite_figures,
    "bijections": suite_bijections,
    "eq1": suite_eq1,
    "gf": suite_gf,
    "oracle": suite_oracle,
}
