"""Exact truncated Laurent series in ``q`` on a fractional exponent grid.

A :class:`TruncatedSeries` stores integer coefficients of ``q**((offset+i)/grid)``
and a truncation point: every coefficient strictly below ``q**(trunc/grid)`` is
known exactly, nothing at or above it is.  ``trunc=None`` marks an exact
Laurent polynomial (known everywhere).

Arithmetic always produces the tightest truncation the operands justify, so
an unknown coefficient can never leak into a reported one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _coeffs
from .errors import (
    DenominatorNotUnit,
    InsufficientTruncation,
    NonIntegerGridAfterNormalization,
    SeriesDivisionByZero,
    ZeroSeries,
)

GRIDS = (1, 2, 4)


def _tmin(*ts: int | None) -> int | None:
    known = [t for t in ts if t is not None]
    return min(known) if known else None


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer Laurent series ``sum(coeffs[i] * q**((offset + i) / grid))``.

    Instances are immutable and canonical: the first and last stored
    coefficients are nonzero and nothing is stored at or above ``trunc``.
    Build them with :meth:`from_coeffs` or the helpers below rather than the
    raw constructor.
    """

    grid: int
    offset: int
    coeffs: tuple[int, ...]
    trunc: int | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def from_coeffs(
        cls,
        coeffs: Iterable[int],
        offset: int = 0,
        grid: int = 1,
        trunc: int | None = None,
    ) -> "TruncatedSeries":
        if grid not in GRIDS:
            raise ValueError(f"grid must be one of {GRIDS}, got {grid}")
        c = [int(x) for x in coeffs]
        if trunc is not None:
            c = c[: max(trunc - offset, 0)]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        c = c[lo:hi]
        if not c:
            return cls(grid, trunc if trunc is not None else 0, (), trunc)
        return cls(grid, offset + lo, tuple(c), trunc)

    @classmethod
    def from_dict(cls, terms: dict[Fraction | int, int], trunc=None, grid=None) -> "TruncatedSeries":
        """Build from ``{exponent_in_q: coefficient}``; exponents may be fractions."""
        exps = [Fraction(e) for e in terms]
        if grid is None:
            grid = 1
            for e in exps:
                while (e * grid).denominator != 1:
                    grid *= 2
        units = {int(e * grid): c for e, c in zip(exps, terms.values())}
        tu = None if trunc is None else int(Fraction(trunc) * grid)
        if not units:
            return cls.from_coeffs([], 0, grid, tu)
        lo, hi = min(units), max(units)
        dense = [0] * (hi - lo + 1)
        for e, c in units.items():
            dense[e - lo] += c
        return cls.from_coeffs(dense, lo, grid, tu)

    @classmethod
    def monomial(cls, exponent: int = 0, coeff: int = 1, grid: int = 1, trunc: int | None = None):
        """``coeff * q**(exponent/grid)``; ``exponent`` is in grid units."""
        return cls.from_coeffs([coeff], exponent, grid, trunc)

    @classmethod
    def one(cls, grid: int = 1) -> "TruncatedSeries":
        return cls.monomial(0, 1, grid)

    @classmethod
    def zero(cls, grid: int = 1, trunc: int | None = None) -> "TruncatedSeries":
        return cls.from_coeffs([], 0, grid, trunc)

    # -- inspection -------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.trunc is None

    @property
    def is_zero(self) -> bool:
        """True when every known coefficient vanishes."""
        return not self.coeffs

    @property
    def valuation(self) -> int | None:
        """Lowest exponent (grid units) that may be nonzero; None for exact zero."""
        if self.coeffs:
            return self.offset
        return self.trunc

    @property
    def degree(self) -> int | None:
        """Highest stored exponent in grid units."""
        return self.offset + len(self.coeffs) - 1 if self.coeffs else None

    def coeff(self, exponent: int) -> int:
        """Coefficient of ``q**(exponent/grid)``."""
        if self.trunc is not None and exponent >= self.trunc:
            raise InsufficientTruncation(
                f"coefficient at {Fraction(exponent, self.grid)} is beyond the truncation "
                f"{Fraction(self.trunc, self.grid)}"
            )
        i = exponent - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __getitem__(self, exponent) -> int:
        e = Fraction(exponent) * self.grid
        if e.denominator != 1:
            return 0
        return self.coeff(int(e))

    def terms(self) -> list[tuple[Fraction, int]]:
        """Nonzero ``(exponent_in_q, coefficient)`` pairs in ascending order."""
        return [(Fraction(self.offset + i, self.grid), c) for i, c in enumerate(self.coeffs) if c]

    def window(self, start: int, stop: int) -> list[int]:
        """Coefficients for grid exponents ``start, ..., stop - 1``."""
        if self.trunc is not None and stop > self.trunc:
            raise InsufficientTruncation(
                f"window up to {Fraction(stop, self.grid)} exceeds truncation "
                f"{Fraction(self.trunc, self.grid)}"
            )
        return [self.coeff(e) for e in range(start, stop)]

    # -- grids ------------------------------------------------------------

    def regrid(self, grid: int) -> "TruncatedSeries":
        """Re-express on a finer (or equal) grid."""
        if grid == self.grid:
            return self
        if grid not in GRIDS or grid % self.grid:
            raise ValueError(f"cannot promote grid {self.grid} to {grid}")
        r = grid // self.grid
        dense = [0] * (r * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            dense[r * i] = c
        t = None if self.trunc is None else r * self.trunc
        return TruncatedSeries.from_coeffs(dense, r * self.offset, grid, t)

    def coarsen(self, grid: int) -> "TruncatedSeries":
        """Re-express on a coarser grid; every stored exponent must land on it."""
        if grid == self.grid:
            return self
        if grid not in GRIDS or self.grid % grid:
            raise ValueError(f"cannot coarsen grid {self.grid} to {grid}")
        r = self.grid // grid
        if any(c and (self.offset + i) % r for i, c in enumerate(self.coeffs)):
            raise ValueError(f"series has exponents off the 1/{grid} grid")
        if self.coeffs and self.offset % r:
            raise ValueError(f"series has exponents off the 1/{grid} grid")
        t = None if self.trunc is None else -((-self.trunc) // r)
        return TruncatedSeries.from_coeffs(self.coeffs[::r], self.offset // r, grid, t)

    def compact(self) -> "TruncatedSeries":
        """Move to the coarsest grid that holds every stored exponent."""
        for g in GRIDS:
            if g >= self.grid:
                break
            try:
                out = self.coarsen(g)
            except ValueError:
                continue
            # a coarser grid may round the truncation up; only accept lossless moves
            if self.trunc is None or out.trunc * (self.grid // g) == self.trunc:
                return out
        return self

    def _common(self, other: "TruncatedSeries"):
        g = max(self.grid, other.grid)
        return self.regrid(g), other.regrid(g)

    # -- arithmetic -------------------------------------------------------

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.grid, self.offset, tuple(-c for c in self.coeffs), self.trunc)

    def __add__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, other, self.grid)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._common(other)
        t = _tmin(a.trunc, b.trunc)
        if not a.coeffs:
            return TruncatedSeries.from_coeffs(b.coeffs, b.offset, b.grid, t)
        if not b.coeffs:
            return TruncatedSeries.from_coeffs(a.coeffs, a.offset, a.grid, t)
        lo = min(a.offset, b.offset)
        hi = max(a.offset + len(a.coeffs), b.offset + len(b.coeffs))
        if t is not None:
            hi = min(hi, t)
        dense = [0] * max(hi - lo, 0)
        for s in (a, b):
            for i, c in enumerate(s.coeffs[: max(hi - s.offset, 0)]):
                dense[s.offset - lo + i] += c
        return TruncatedSeries.from_coeffs(dense, lo, a.grid, t)

    __radd__ = __add__

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-other)

    def __rsub__(self, other) -> "TruncatedSeries":
        return (-self) + other

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries.from_coeffs(
                [other * c for c in self.coeffs], self.offset, self.grid, self.trunc
            )
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._common(other)
        if a.is_exact and not a.coeffs:
            return TruncatedSeries.zero(a.grid)
        if b.is_exact and not b.coeffs:
            return TruncatedSeries.zero(a.grid)
        ta = None if a.trunc is None else a.trunc + b.valuation
        tb = None if b.trunc is None else b.trunc + a.valuation
        t = _tmin(ta, tb)
        if not a.coeffs or not b.coeffs:
            return TruncatedSeries.zero(a.grid, t)
        lo = a.offset + b.offset
        n = None if t is None else t - lo
        return TruncatedSeries.from_coeffs(_coeffs.mul(list(a.coeffs), list(b.coeffs), n), lo, a.grid, t)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncatedSeries":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("negative powers need series_div")
        out = TruncatedSeries.one(self.grid)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __truediv__(self, other) -> "TruncatedSeries":
        return series_div(self, other)

    def shift(self, exponent: int) -> "TruncatedSeries":
        """Multiply by ``q**(exponent/grid)``."""
        t = None if self.trunc is None else self.trunc + exponent
        if not self.coeffs:
            return TruncatedSeries.zero(self.grid, t)
        return TruncatedSeries(self.grid, self.offset + exponent, self.coeffs, t)

    def truncate(self, trunc: int | None) -> "TruncatedSeries":
        """Forget everything at or above ``trunc`` (grid units)."""
        t = _tmin(self.trunc, trunc)
        return TruncatedSeries.from_coeffs(self.coeffs, self.offset, self.grid, t)

    def subs_inverse(self) -> "TruncatedSeries":
        """Exact Laurent polynomial with ``q`` replaced by ``q**-1``."""
        if not self.is_exact:
            raise ValueError("q -> 1/q is only defined for exact Laurent polynomials")
        if not self.coeffs:
            return self
        return TruncatedSeries(self.grid, -self.degree, self.coeffs[::-1], None)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = TruncatedSeries.monomial(0, other, self.grid)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._common(other)
        return (a.offset, a.coeffs, a.trunc) == (b.offset, b.coeffs, b.trunc)

    def __hash__(self) -> int:
        s = self.compact()
        return hash((s.grid, s.offset, s.coeffs, s.trunc))

    def same_known(self, other: "TruncatedSeries") -> bool:
        """Equality on the window both operands know."""
        return (self - other).is_zero

    # -- display / serialization -----------------------------------------

    def __str__(self) -> str:
        parts = []
        for e, c in self.terms():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}" if e.denominator == 1 and e > 0 else f"q^({e})"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}" if mono else str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        if text.startswith("+ "):
            text = text[2:]
        elif text.startswith("- "):
            text = "-" + text[2:]
        if not text:
            text = "0"
        if self.trunc is not None:
            text += f" + O(q^{Fraction(self.trunc, self.grid)})"
        return text

    def to_json(self) -> dict:
        """Serializable form; coefficients are decimal strings."""
        return {
            "grid": self.grid,
            "offset": self.offset,
            "trunc": self.trunc,
            "coeffs": [str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "TruncatedSeries":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_coeffs(
            [int(c) for c in data["coeffs"]], int(data["offset"]), int(data["grid"]),
            None if data.get("trunc") is None else int(data["trunc"]),
        )


# -- module-level operations ---------------------------------------------

def series_arith(op: str, *args, exponent: int | None = None, power: int | None = None):
    """Dispatch ``add``, ``negate``, ``multiply``, ``monomial_shift`` or ``integer_power``."""
    if op == "add":
        out = args[0]
        for s in args[1:]:
            out = out + s
        return out
    if op == "negate":
        (s,) = args
        return -s
    if op == "multiply":
        out = args[0]
        for s in args[1:]:
            out = out * s
        return out
    if op == "monomial_shift":
        (s,) = args
        return s.shift(exponent)
    if op == "integer_power":
        (s,) = args
        return s ** power
    raise ValueError(f"unknown series operation {op!r}")


def series_div(num: TruncatedSeries, den: TruncatedSeries, trunc: int | None = None) -> TruncatedSeries:
    """Quotient ``num / den``.

    ``den`` must have lowest coefficient +1 or -1.  If both operands are exact
    and the division leaves no remainder the result is exact; otherwise the
    quotient is a power series and ``trunc`` (grid units of the result) caps
    its known window.  When both operands are exact but do not divide,
    ``trunc`` is mandatory.
    """
    num, den = num._common(den)
    if not den.coeffs:
        raise SeriesDivisionByZero("division by a series with no known nonzero coefficient")
    if den.coeffs[0] not in (1, -1):
        raise DenominatorNotUnit(f"lowest coefficient of the denominator is {den.coeffs[0]}")
    g = num.grid
    v = den.offset
    if num.is_exact and not num.coeffs:
        return TruncatedSeries.zero(g)
    if num.is_exact and den.is_exact:
        quo = _coeffs.divide_exact(list(num.coeffs), list(den.coeffs))
        if quo is not None:
            return TruncatedSeries.from_coeffs(quo, num.offset - v, g, None).truncate(trunc)
        if trunc is None:
            raise ValueError("inexact division of Laurent polynomials needs an explicit trunc")
    rel = []
    if num.trunc is not None:
        rel.append(num.trunc - v)
    if den.trunc is not None:
        nv = num.valuation
        rel.append(den.trunc - v + nv - v)
    t = _tmin(trunc, *rel)
    if not num.coeffs:
        return TruncatedSeries.zero(g, t)
    lo = num.offset - v
    n = t - lo
    return TruncatedSeries.from_coeffs(
        _coeffs.divide(list(num.coeffs), list(den.coeffs), max(n, 0)), lo, g, t
    )


def normalize_tail(s: TruncatedSeries) -> tuple[TruncatedSeries, int, Fraction]:
    """Strip the leading signed monomial: ``s = sign * q**shift * result``.

    ``result`` has offset 0 and leading coefficient +1.
    """
    if not s.coeffs:
        raise ZeroSeries("cannot normalize a series with no known nonzero coefficient")
    sign = 1 if s.coeffs[0] > 0 else -1
    shift = Fraction(s.offset, s.grid)
    out = s.shift(-s.offset)
    if sign < 0:
        out = -out
    return out, sign, shift


@dataclass(frozen=True)
class ComparisonReport:
    """Outcome of comparing two series after sign/monomial normalization.

    ``agreed_terms`` counts the leading normalized coefficients that match
    (it may exceed the requested window); ``first_mismatch`` is the exponent
    of the first disagreement inside the window, or None.  ``monomial_shift``
    is the leading exponent of the first operand minus that of the second.
    """

    agreed_terms: int
    first_mismatch: int | None
    sign_flip: bool
    monomial_shift: Fraction
    window: int
    note: str = ""

    @property
    def agrees(self) -> bool:
        return self.first_mismatch is None

    def to_json(self) -> dict:
        return {
            "agreed_terms": self.agreed_terms,
            "first_mismatch": self.first_mismatch,
            "sign_flip": self.sign_flip,
            "monomial_shift": str(self.monomial_shift),
            "window": self.window,
            "note": self.note,
        }


def _integer_normal(s: TruncatedSeries) -> tuple[TruncatedSeries, int, Fraction]:
    norm, sign, shift = normalize_tail(s)
    try:
        norm = norm.coarsen(1)
    except ValueError:
        raise NonIntegerGridAfterNormalization(
            f"normalized series still has fractional exponents: {norm}"
        ) from None
    return norm, sign, shift


def agree_up_to(a: TruncatedSeries, b: TruncatedSeries, n: int) -> ComparisonReport:
    """Compare the first ``n`` normalized coefficients of ``a`` and ``b``."""
    if n < 1:
        raise ValueError("n must be positive")
    na, sa, sha = _integer_normal(a)
    nb, sb, shb = _integer_normal(b)
    for label, s in (("first", na), ("second", nb)):
        if s.trunc is not None and s.trunc < n:
            raise InsufficientTruncation(
                f"{label} operand knows only {s.trunc} normalized coefficients, {n} requested"
            )
    known = _tmin(na.trunc, nb.trunc)
    limit = known if known is not None else max(n, len(na.coeffs), len(nb.coeffs))
    agreed = 0
    while agreed < limit and na.coeff(agreed) == nb.coeff(agreed):
        agreed += 1
    mismatch = agreed if agreed < n else None
    return ComparisonReport(agreed, mismatch, sa != sb, sha - shb, n)


def series_equal_below(a: TruncatedSeries, b: TruncatedSeries, exponent: int) -> int | None:
    """First grid exponent below ``exponent`` where ``a`` and ``b`` differ, or None."""
    a, b = a._common(b)
    for e in range(min(a.valuation or 0, b.valuation or 0), exponent):
        if a.coeff(e) != b.coeff(e):
            return e
    return None


def as_series(values: Sequence[int], trunc: int | None = None) -> TruncatedSeries:
    """Shorthand for an integer-grid series starting at ``q**0``."""
    return TruncatedSeries.from_coeffs(values, 0, 1, trunc)
