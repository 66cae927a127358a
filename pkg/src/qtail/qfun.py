"""q-Pochhammer symbols, quantum integers and Gaussian binomials.

Truncation arguments of the public functions here are plain ``q`` exponents:
``trunc=N`` means "known strictly below ``q**N``".
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import DivergentInfiniteProduct
from .series import TruncatedSeries, series_div

INFINITY = float("inf")


@dataclass(frozen=True)
class SignedMonomial:
    """``sign * q**(halfexp/2)``."""

    sign: int
    halfexp: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def q(cls, exponent: int | Fraction = 1, sign: int = 1) -> "SignedMonomial":
        h = Fraction(exponent) * 2
        if h.denominator != 1:
            raise ValueError(f"exponent {exponent} is not a multiple of 1/2")
        return cls(sign, int(h))

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.halfexp, 2)

    def power(self, k: int) -> tuple[int, int]:
        """``(sign, halfexp)`` of this monomial raised to ``k >= 0``."""
        return (self.sign if k % 2 else 1), self.halfexp * k

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        return f"{s}q^{self.exponent}"


Q = SignedMonomial(1, 2)


def _as_array(n: int) -> np.ndarray:
    return np.zeros(n, dtype=object)


def _product_of_binomials(sign: int, exps: list[int], limit: int | None) -> tuple[np.ndarray, int] | None:
    """Dense ``prod(1 - sign * x**e)`` over ``exps`` as ``(coeffs, offset)``.

    Exponents are grid units; coefficients at or above ``limit`` are dropped.
    Returns None when some factor is identically zero.
    """
    c = _as_array(1)
    c[0] = 1
    off = 0
    for e in exps:
        if e == 0:
            if sign == 1:
                return None
            c = 2 * c
            continue
        n = len(c)
        if e > 0:
            r = _as_array(n + e)
            r[:n] = c
            r[e:] = r[e:] - sign * c
        else:
            r = _as_array(n - e)
            r[:n] = r[:n] - sign * c
            r[-e:] = r[-e:] + c
            off += e
        # only once the negative factors are done can high terms be dropped
        if limit is not None and e >= 0 and off + len(r) > limit:
            r = r[: max(limit - off, 0)]
        c = r
    return c, off


def pochhammer(a: SignedMonomial, n, trunc: int | None = None) -> TruncatedSeries:
    """``(a; q)_n = prod_{j<n} (1 - a q**j)``, with ``n`` an integer or INFINITY.

    Finite products are exact unless ``trunc`` is given; the infinite
    product needs ``trunc``.
    """
    grid = 1 if a.halfexp % 2 == 0 else 2
    step = grid
    h = a.halfexp if grid == 2 else a.halfexp // 2
    limit = None if trunc is None else trunc * grid
    if n == INFINITY:
        if trunc is None:
            raise ValueError("the infinite product needs a truncation")
        if a.sign == 1 and a.halfexp <= 0 and a.halfexp % 2 == 0:
            raise DivergentInfiniteProduct(f"({a}; q)_oo has a vanishing factor")
        exps = []
        j = 0
        low = 0
        while True:
            e = h + step * j
            low += min(e, 0)
            if e > 0 and low + e >= limit:
                break
            exps.append(e)
            j += 1
    else:
        if n < 0:
            raise ValueError("n must be nonnegative")
        exps = [h + step * j for j in range(int(n))]
    res = _product_of_binomials(a.sign, exps, limit)
    if res is None:
        return TruncatedSeries.zero(grid, limit)
    c, off = res
    return TruncatedSeries.from_coeffs(c.tolist(), off, grid, limit)


@lru_cache(maxsize=256)
def euler(trunc: int) -> TruncatedSeries:
    """The Euler function ``(q; q)_oo`` known below ``q**trunc``."""
    return pochhammer(Q, INFINITY, trunc)


@lru_cache(maxsize=None)
def qq(n: int) -> TruncatedSeries:
    """Exact ``(q; q)_n``."""
    if n < 0:
        raise ValueError("(q;q)_n needs n >= 0")
    return pochhammer(Q, n)


@lru_cache(maxsize=4096)
def qq_reciprocal(n: int, trunc: int) -> TruncatedSeries:
    """``1 / (q; q)_n`` known below ``q**trunc`` (``n`` may be INFINITY)."""
    if trunc <= 0:
        return TruncatedSeries.zero(1, trunc)
    c = _as_array(trunc)
    c[0] = 1
    top = trunc if n == INFINITY else min(int(n) + 1, trunc)
    for j in range(1, top):
        # multiply by 1/(1 - q^j): c[i] += c[i - j], applied block by block
        for start in range(j, trunc, j):
            stop = min(start + j, trunc)
            c[start:stop] = c[start:stop] + c[start - j:stop - j]
    return TruncatedSeries.from_coeffs(c.tolist(), 0, 1, trunc)


def quantum_int(m: int) -> TruncatedSeries:
    """Balanced quantum integer ``[m] = (q**(m/2) - q**(-m/2)) / (q**(1/2) - q**(-1/2))``."""
    if m < 0:
        raise ValueError("quantum_int needs m >= 0")
    if m == 0:
        return TruncatedSeries.zero(2)
    dense = [0] * (2 * m - 1)
    dense[::2] = [1] * m
    return TruncatedSeries.from_coeffs(dense, -(m - 1), 2)


@lru_cache(maxsize=None)
def quantum_factorial(m: int) -> TruncatedSeries:
    """``[m]! = [1][2]...[m]`` as an exact Laurent polynomial in ``q**(1/2)``."""
    if m < 0:
        raise ValueError("quantum_factorial needs m >= 0")
    out = TruncatedSeries.one(2)
    for j in range(2, m + 1):
        out = out * quantum_int(j)
    return out


@lru_cache(maxsize=None)
def gauss_binom(l: int, i: int) -> TruncatedSeries:
    """Gaussian binomial ``(q;q)_l / ((q;q)_i (q;q)_{l-i})``; zero when ``i`` is out of range."""
    if i < 0 or i > l or l < 0:
        return TruncatedSeries.zero(1)
    out = series_div(qq(l), qq(i) * qq(l - i))
    assert out.is_exact, "Gaussian binomial division left a remainder"
    return out
