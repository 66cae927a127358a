"""Exact factored rational functions ``sign * q**e * prod_j (1 - q**j)**m_j``.

Every skein coefficient in this package (unknot values, theta values, bubble
coefficients, quantum factorials, Gaussian binomials) is of this shape.  The
binomials ``1 - q**j`` are multiplicatively independent, so the exponent map
``j -> m_j`` is a canonical form: products and quotients are exact, and two
values are equal as rational functions exactly when their fields agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .series import TruncatedSeries, series_div


def _grid_of(e: Fraction) -> int:
    d = e.denominator
    if d not in (1, 2, 4):
        raise ValueError(f"exponent {e} is off the 1/4 grid")
    return d


@dataclass(frozen=True)
class QRatio:
    """``sign * q**qexp * prod((1 - q**j)**m for j, m in factors)``; sign 0 is zero."""

    sign: int
    qexp: Fraction = Fraction(0)
    factors: tuple[tuple[int, int], ...] = ()

    @classmethod
    def build(cls, sign: int, qexp, powers: dict[int, int] | None = None) -> "QRatio":
        if sign == 0:
            return ZERO
        items = tuple(sorted((j, m) for j, m in (powers or {}).items() if m))
        if any(j <= 0 for j, _ in items):
            raise ValueError("binomial factors need j >= 1")
        return cls(1 if sign > 0 else -1, Fraction(qexp), items)

    @classmethod
    def monomial(cls, qexp=0, sign: int = 1) -> "QRatio":
        return cls.build(sign, qexp)

    @classmethod
    def qq(cls, n: int, power: int = 1) -> "QRatio":
        """``(q; q)_n ** power``."""
        if n < 0:
            raise ValueError(f"(q;q)_{n} is undefined for negative n")
        return cls.build(1, 0, {j: power for j in range(1, n + 1)})

    @classmethod
    def binomial(cls, j: int, power: int = 1) -> "QRatio":
        """``(1 - q**j) ** power``."""
        return cls.build(1, 0, {j: power})

    # -- algebra ------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def powers(self) -> dict[int, int]:
        return dict(self.factors)

    def __mul__(self, other) -> "QRatio":
        if isinstance(other, int):
            if other in (1, -1):
                return QRatio.build(self.sign * other, self.qexp, self.powers)
            return NotImplemented
        if not isinstance(other, QRatio):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        p = self.powers
        for j, m in other.factors:
            p[j] = p.get(j, 0) + m
        return QRatio.build(self.sign * other.sign, self.qexp + other.qexp, p)

    __rmul__ = __mul__

    def __neg__(self) -> "QRatio":
        return QRatio.build(-self.sign, self.qexp, self.powers)

    def inverse(self) -> "QRatio":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return QRatio.build(self.sign, -self.qexp, {j: -m for j, m in self.factors})

    def __truediv__(self, other) -> "QRatio":
        if not isinstance(other, QRatio):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> "QRatio":
        if k == 0:
            return ONE
        if self.is_zero:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return ZERO
        sign = self.sign if k % 2 else 1
        return QRatio.build(sign, self.qexp * k, {j: m * k for j, m in self.factors})

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            if not other.is_exact:
                return NotImplemented
            return self.is_laurent_polynomial and self.laurent() == other
        if isinstance(other, int):
            other = QRatio.monomial(0, other) if other in (1, -1) else (ZERO if other == 0 else None)
            if other is None:
                return False
        if not isinstance(other, QRatio):
            return NotImplemented
        return (self.sign, self.qexp, self.factors) == (other.sign, other.qexp, other.factors)

    def __hash__(self) -> int:
        return hash((self.sign, self.qexp, self.factors))

    # -- expansion ---------------------------------------------------------

    @property
    def valuation(self) -> Fraction:
        """Exponent of the leading term; its coefficient is ``sign``."""
        return self.qexp

    @property
    def grid(self) -> int:
        return _grid_of(self.qexp)

    def _poly(self, positive: bool, limit: int | None) -> list[int]:
        c = np.zeros(1, dtype=object)
        c[0] = 1
        for j, m in self.factors:
            if (m > 0) != positive:
                continue
            for _ in range(abs(m)):
                n = len(c) + j if limit is None else min(len(c) + j, limit)
                r = np.zeros(n, dtype=object)
                r[: min(len(c), n)] = c[:n]
                if j < n:
                    r[j:] = r[j:] - c[: n - j]
                c = r
        return c.tolist()

    def numerator(self) -> TruncatedSeries:
        """``sign * q**qexp`` times the positive-power factors, as an exact polynomial."""
        g = self.grid
        c = self._poly(True, None) if not self.is_zero else []
        poly = TruncatedSeries.from_coeffs([self.sign * x for x in c], 0, 1)
        return poly.regrid(g).shift(int(self.qexp * g))

    def denominator(self) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs(self._poly(False, None), 0, 1)

    @property
    def is_laurent_polynomial(self) -> bool:
        if self.is_zero:
            return True
        if all(m > 0 for _, m in self.factors):
            return True
        try:
            self.laurent()
        except ValueError:
            return False
        return True

    def laurent(self) -> TruncatedSeries:
        """Exact Laurent polynomial; ValueError if the value is not one."""
        if self.is_zero:
            return TruncatedSeries.zero(1)
        num, den = self.numerator(), self.denominator()
        try:
            return series_div(num, den)
        except ValueError:
            raise ValueError(f"{self} is not a Laurent polynomial") from None

    def series(self, terms: int) -> TruncatedSeries:
        """Expansion known for ``terms`` powers of ``q`` past the leading exponent."""
        g = self.grid
        if self.is_zero:
            return TruncatedSeries.zero(g)
        if terms <= 0:
            return TruncatedSeries.zero(g, int(self.qexp * g) + terms * g)
        c = np.zeros(terms, dtype=object)
        c[0] = 1
        for j, m in self.factors:
            if j >= terms:
                continue
            for _ in range(abs(m)):
                if m > 0:
                    c[j:] = c[j:] - c[: terms - j]
                else:
                    for start in range(j, terms, j):
                        stop = min(start + j, terms)
                        c[start:stop] = c[start:stop] + c[start - j: stop - j]
        lo = int(self.qexp * g)
        dense = [0] * (terms * g)
        dense[::g] = [self.sign * x for x in c.tolist()]
        return TruncatedSeries.from_coeffs(dense, lo, g, lo + terms * g)

    def series_below(self, trunc: Fraction | int) -> TruncatedSeries:
        """Expansion known strictly below ``q**trunc`` (``trunc`` a q exponent)."""
        terms = Fraction(trunc) - self.qexp
        whole = int(terms) if terms == int(terms) else int(terms) + 1
        s = self.series(max(whole, 0))
        return s.truncate(int(Fraction(trunc) * s.grid)) if whole > 0 else s

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = [("-" if self.sign < 0 else "") + f"q^({self.qexp})"]
        for j, m in self.factors:
            parts.append(f"(1-q^{j})^{m}" if m != 1 else f"(1-q^{j})")
        return "*".join(parts)


ZERO = QRatio(0)
ONE = QRatio(1)


def common_fraction(terms) -> tuple[TruncatedSeries, "QRatio"]:
    """Write ``sum(terms)`` as ``numerator / denominator`` over a shared denominator.

    The numerator is an exact Laurent polynomial; the denominator is a pure
    product of ``(1 - q**j)`` factors with positive exponents.
    """
    terms = [t for t in terms if not t.is_zero]
    if not terms:
        return TruncatedSeries.zero(1), ONE
    need: dict[int, int] = {}
    for t in terms:
        for j, m in t.factors:
            if m < 0:
                need[j] = max(need.get(j, 0), -m)
    den = QRatio.build(1, 0, need)
    num = None
    for t in terms:
        part = (t * den).numerator()
        num = part if num is None else num + part
    return num, den


def exact_sum(terms) -> TruncatedSeries:
    """``sum(terms)`` as an exact Laurent polynomial; ValueError if it is not one."""
    num, den = common_fraction(terms)
    if num.is_zero:
        return num
    try:
        return series_div(num, den.numerator())
    except ValueError:
        raise ValueError("the sum is not a Laurent polynomial") from None


def window_sum(terms, width: int, lo=None) -> TruncatedSeries:
    """``sum(terms)`` known below ``q**(lo + width)``.

    ``lo`` defaults to the lowest exponent among the terms.
    """
    terms = [t for t in terms if not t.is_zero]
    if not terms:
        return TruncatedSeries.zero(1)
    if lo is None:
        lo = min(t.qexp for t in terms)
    out = None
    for t in terms:
        part = t.series_below(lo + width)
        out = part if out is None else out + part
    return out
