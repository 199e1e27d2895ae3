"""Exact truncated power series, Motzkin numbers and ballot numbers.

Every generating function here returns a :class:`TruncatedSeries` whose
coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import NotPrime


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series c_0 + c_1 x + ... + c_N x^N known exactly up to order N.

    Binary operations truncate to the smaller order of the two operands.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int, order: int) -> TruncatedSeries:
        return cls((c,) + (0,) * order)

    @classmethod
    def x(cls, order: int) -> TruncatedSeries:
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, power: int, order: int, coeff: int = 1) -> TruncatedSeries:
        coeffs = [0] * (order + 1)
        if power <= order:
            coeffs[power] = coeff
        return cls(tuple(coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, int):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def derivative(self) -> TruncatedSeries:
        """Term-by-term derivative; the result is known to one order less."""
        if self.order == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return TruncatedSeries(tuple(n * self.coeffs[n] for n in range(1, self.order + 1)))

    def shift(self, m: int) -> TruncatedSeries:
        """Multiply by x^m, keeping the truncation order unchanged."""
        if m < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries(((0,) * m + self.coeffs)[: self.order + 1])


def motzkin_numbers(order: int) -> list[int]:
    """M_0 .. M_order via M_n = M_{n-1} + sum_k M_k M_{n-2-k}."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    m = [1]
    for n in range(1, order + 1):
        m.append(m[n - 1] + sum(m[k] * m[n - 2 - k] for k in range(n - 1)))
    return m


_MOTZKIN_TABLE = motzkin_numbers(64)


def motzkin(n: int) -> int:
    """M_n, with M_n = 0 for negative n."""
    global _MOTZKIN_TABLE
    if n < 0:
        return 0
    if n >= len(_MOTZKIN_TABLE):
        _MOTZKIN_TABLE = motzkin_numbers(2 * n)
    return _MOTZKIN_TABLE[n]


def motzkin_series(order: int) -> TruncatedSeries:
    return TruncatedSeries(tuple(motzkin_numbers(order)))


@lru_cache(maxsize=None)
def _paths_to_axis(length: int, height: int) -> int:
    """Motzkin-step paths of the given length from ``height`` down to 0, staying >= 0."""
    if height < 0 or height > length:
        return 0
    if length == 0:
        return 1
    return (
        _paths_to_axis(length - 1, height + 1)
        + _paths_to_axis(length - 1, height)
        + (_paths_to_axis(length - 1, height - 1) if height > 0 else 0)
    )


def ballot_number(n: int, k: int) -> int:
    """T_{n,k}: Motzkin paths of length n whose first down is at position k.

    T_{k-1,k} = 1 counts the all-horizontal path of length k-1. Any index
    outside the defined range gives 0.
    """
    if k < 1 or n < k - 1:
        return 0
    if n == k - 1:
        return 1
    total = 0
    # j ups among the first k-1 steps, then the down at position k.
    for j in range(1, k):
        ways_prefix = binom(k - 1, j)
        total += ways_prefix * _paths_to_axis(n - k, j - 1)
    return total


def binom(a: int, b: int) -> int:
    """C(a, b), taken to be 0 whenever b < 0 or a < b."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


def ballot_gf(k: int, order: int) -> TruncatedSeries:
    """(1 + x m(x))^{k-1} x^{k-1}, whose x^n coefficient is T_{n,k}."""
    if k < 1:
        raise ValueError("k must be at least 1")
    m = motzkin_series(order)
    one_plus_xm = 1 + m.shift(1)
    return (one_plus_xm ** (k - 1)).shift(k - 1)


def _xm_prime(order: int) -> TruncatedSeries:
    # (x m)' needs x m to one order beyond the target.
    return motzkin_series(order + 1).shift(1).derivative()


def gf_L2(order: int) -> TruncatedSeries:
    """x^2 + x^4 (x m(x))'."""
    return TruncatedSeries.monomial(2, order) + _xm_prime(order).shift(4)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def require_odd_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")


def gf_rs(r: int, s: int, order: int) -> TruncatedSeries:
    """x^{r+s} (1 + x m)^{r+s-2} (1 + x^2 (x m)')."""
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    m = motzkin_series(order)
    base = (1 + m.shift(1)) ** (r + s - 2)
    return (base * (1 + _xm_prime(order).shift(2))).shift(r + s)


def gf_Lp(p: int, order: int) -> TruncatedSeries:
    """2 x^p (1 + x m)^{p-2} (x^2 (x m)' + 1) for an odd prime p."""
    require_odd_prime(p)
    m = motzkin_series(order)
    base = (1 + m.shift(1)) ** (p - 2)
    return 2 * (base * (_xm_prime(order).shift(2) + 1)).shift(p)
