"""Closed-form counts of Dyck paths by the value of L.

Motzkin and ballot numbers with a negative index are 0, as are binomials
C(a, b) with b < 0 or a < b, so the formulas need no small-n case splits
beyond the ones written out below.
"""

from __future__ import annotations

from typing import NamedTuple

from . import oracle
from .series import ballot_number as T
from .series import binom, is_prime, motzkin as M, require_odd_prime

CLOSED_FORM_K = "1, 2, 4, 6 and odd primes"


def _check_n(n: int) -> None:
    if n < 1:
        raise ValueError(f"semilength must be at least 1, got {n}")


def count_L1(n: int) -> int:
    _check_n(n)
    return M(n - 1)


def count_rs(n: int, r: int, s: int) -> int:
    """|D_n^{r,s}|: paths whose only star column is (r, s)."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    _check_n(n)
    if n < r + s:
        return 0
    k = r + s - 1
    return T(n - 2, k) + sum((i + 1) * M(i) * T(n - 4 - i, k) for i in range(n - 2 - s - r + 1))


def count_rs_two_returns(n: int, r: int, s: int) -> int:
    return T(n - 2, r + s - 1) if n >= r + s else 0


def count_rs_one_return(n: int, r: int, s: int) -> int:
    return sum((i + 1) * M(i) * T(n - 4 - i, r + s - 1) for i in range(n - 2 - s - r + 1))


def count_L2(n: int) -> int:
    _check_n(n)
    if n == 1 or n == 3:
        return 0
    if n == 2:
        return 1
    return (n - 3) * M(n - 4)


def count_Lp(n: int, p: int) -> int:
    require_odd_prime(p)
    return 2 * count_rs(n, 1, p - 1)


def l4_type1_count(n: int) -> int:
    return binom(n - 5, 2) * M(n - 7)


def l4_type2_count(n: int) -> int:
    return M(n - 5)


def l4_type3_count(n: int) -> int:
    return sum((i + 1) * M(i) * M(n - 7 - i) for i in range(n - 6))


def l4_type4_count(n: int) -> int:
    return 1 if n == 3 else l4_type3_count(n)


def count_L4(n: int) -> int:
    _check_n(n)
    if n < 3:
        return 0
    if n == 3:
        return 1
    single = 2 * (T(n - 2, 3) + sum((i + 1) * M(i) * T(n - 4 - i, 3) for i in range(n - 5)))
    return single + l4_type1_count(n) + l4_type2_count(n) + 2 * l4_type3_count(n)


class L6Count(NamedTuple):
    total: int
    rs_1_5: int
    rs_2_2: int
    mixed: int
    brute_forced: str = "mixed"


def count_L6_parts(n: int, max_n: int | None = None) -> L6Count:
    """|D_n^6| split into its closed-form pieces and the brute-forced {2,3} case."""
    _check_n(n)
    a = count_rs(n, 1, 5)
    b = count_rs(n, 2, 2)
    mixed = oracle.filter_by_star_signature(n, (2, 3), max_n=max_n)
    return L6Count(2 * a + b + mixed, a, b, mixed)


def count_L6(n: int, max_n: int | None = None) -> int:
    return count_L6_parts(n, max_n).total


def has_closed_form(k: int) -> bool:
    return k in (1, 2, 4, 6) or (k > 2 and is_prime(k))


def count_Lk(n: int, k: int, max_n: int | None = None) -> int:
    """|D_n^k| by closed form where one exists, else by exhaustive histogram."""
    if k == 1:
        return count_L1(n)
    if k == 2:
        return count_L2(n)
    if k == 4:
        return count_L4(n)
    if k == 6:
        return count_L6(n, max_n)
    if k > 2 and is_prime(k):
        return count_Lp(n, k)
    return oracle.l_histogram(n, max_n=max_n).get(k, 0)


def weighted_sum_eq1(n: int, max_n: int | None = None) -> int:
    """Sum over D in D_n of L(D) * 2^returns(D)."""
    return sum(p.l_value << p.returns for p in oracle.scan_paths(n, max_n=max_n))
