"""Skein coefficients: unknot and theta values, bubble coefficients and their products.

All values are evaluated in ``q`` after ``A = q**(1/4)`` and returned as exact
:class:`~qtail.qratio.QRatio` objects.  Theta values and bubble coefficients
are rational functions of ``q**(1/2)``, not Laurent polynomials in general
(``theta_coeff(2, 2, 2) = -[3][4]/[2]**2``), so a factored exact form is the
natural carrier.  Use ``.laurent()`` where a polynomial is expected and
``.series(terms)`` for expansions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import IndexOutOfRange, NonMonotoneIndices, PreconditionViolated
from .qratio import ONE, ZERO, QRatio

_qq = QRatio.qq


@lru_cache(maxsize=None)
def delta(n: int) -> QRatio:
    """Unknot value ``(-1)**n [n+1]``; ``delta(-1)`` is zero by convention."""
    if n == -1:
        return ZERO
    if n < -1:
        raise IndexOutOfRange(f"delta needs n >= 0, got {n}")
    powers: dict[int, int] = {n + 1: 1}
    powers[1] = powers.get(1, 0) - 1
    return QRatio.build((-1) ** n, Fraction(-n, 2), powers)


@lru_cache(maxsize=None)
def qfact(m: int) -> QRatio:
    """Balanced quantum factorial ``[m]! = q**(-m(m-1)/4) (q;q)_m / (1-q)**m``."""
    if m < 0:
        raise IndexOutOfRange(f"[{m}]! is undefined")
    return QRatio.build(1, Fraction(-m * (m - 1), 4), {1: -m}) * _qq(m)


def qint(m: int) -> QRatio:
    """Balanced quantum integer ``[m]``."""
    if m == 0:
        return ZERO
    return qfact(m) / qfact(m - 1)


@dataclass(frozen=True)
class AdmissibleTriple:
    """Colors ``(a, b, c)`` meeting at a trivalent vertex."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 0:
            raise PreconditionViolated(f"colors must be nonnegative: {self}")

    @property
    def admissible(self) -> bool:
        a, b, c = self.a, self.b, self.c
        return (a + b + c) % 2 == 0 and abs(a - b) <= c <= a + b

    @property
    def interior(self) -> tuple[int, int, int]:
        """Interior colors ``(x, y, z)``; raises if the triple is not admissible."""
        if not self.admissible:
            raise PreconditionViolated(f"{self} is not admissible")
        a, b, c = self.a, self.b, self.c
        return (a + b - c) // 2, (a + c - b) // 2, (b + c - a) // 2


def theta_coeff(a, b: int | None = None, c: int | None = None) -> QRatio:
    """Theta graph evaluation; zero on inadmissible triples.

    Accepts an :class:`AdmissibleTriple` or three colors.
    """
    t = a if isinstance(a, AdmissibleTriple) else AdmissibleTriple(a, b, c)
    if not t.admissible:
        return ZERO
    return _theta(*t.interior)


@lru_cache(maxsize=None)
def _theta(x: int, y: int, z: int) -> QRatio:
    num = qfact(x + y + z + 1) * qfact(x) * qfact(y) * qfact(z)
    den = qfact(x + y) * qfact(x + z) * qfact(y + z)
    return (num / den) * (-1) ** (x + y + z)


def theta_nn2i(n: int, i: int) -> QRatio:
    """Closed Pochhammer form of ``theta_coeff(n, n, 2i)``."""
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"theta_nn2i needs 0 <= i <= n, got n={n}, i={i}")
    head = QRatio.monomial(Fraction(-(n + i), 2), (-1) ** (i + n))
    num = _qq(i, 2) * _qq(n - i) * _qq(n + i + 1)
    den = QRatio.binomial(1) * _qq(2 * i) * _qq(n, 2)
    return head * num / den


def gauss(l: int, i: int) -> QRatio:
    """Gaussian binomial as a factored value; zero out of range."""
    if i < 0 or i > l:
        return ZERO
    return _qq(l) / (_qq(i) * _qq(l - i))


@lru_cache(maxsize=65536)
def bubble_general(m: int, n: int, k: int, l: int, i: int) -> QRatio:
    """Bubble expansion coefficient for the bubble with outer colors ``m, n``
    and inner colors ``k, l``.

    ``l = 0`` is accepted (the bubble is then a single edge and the only
    coefficient, at ``i = 0``, is 1).  Indices outside ``[0, min(m, n, l)]``
    give zero.
    """
    if min(m, n, k, l) < 0 or k < l:
        raise PreconditionViolated(f"bubble_general needs m, n >= 0 and k >= l >= 0, got {(m, n, k, l)}")
    if i < 0 or i > min(m, n, l):
        return ZERO
    e = i * (i - l)
    v = QRatio.monomial(Fraction(e, 2), (-1) ** e)
    for j in range(l - i):
        v = v * delta(k - j - 1) * delta(m + n + k - i - j)
    for s in range(i):
        v = v * delta(n - s - 1) * delta(m - s - 1)
    for t in range(l):
        v = v / (delta(n + k - t - 1) * delta(m + k - t - 1))
    return v * gauss(l, i)


def bubble_nann(n: int, a: int, b: int) -> QRatio:
    """Closed form of the bubble coefficient with colors ``(n, a; n, n)`` at index ``b``."""
    if not 0 <= b <= min(a, n):
        raise IndexOutOfRange(f"bubble_nann needs 0 <= b <= min(a, n), got n={n}, a={a}, b={b}")
    head = QRatio.monomial(Fraction(b, 2) + b * b - Fraction(n, 2), (-1) ** (n + b))
    num = _qq(a, 2) * _qq(n, 4) * _qq(1 + a - b + 2 * n)
    den = _qq(a - b) * _qq(b, 2) * _qq(2 * n) * _qq(a + n) * _qq(1 + a + n) * _qq(n - b, 2)
    return head * num / den


def bubble_sym(n: int, a: int, i: int) -> QRatio:
    """Closed form of the bubble coefficient with colors ``(n-a, n-a; n+a, n)`` at index ``i``."""
    if i < 0 or a < 0 or a + i > n:
        raise IndexOutOfRange(f"bubble_sym needs i, a >= 0 and a + i <= n, got n={n}, a={a}, i={i}")
    head = QRatio.monomial(Fraction(i, 2) + a * i + i * i - Fraction(n, 2), (-1) ** (i + n))
    num = _qq(n, 3) * _qq(n - a, 2) * _qq(a + n) * _qq(1 - a - i + 3 * n)
    den = _qq(i) * _qq(a + i) * _qq(2 * n, 2) * _qq(n - i) * _qq(n - a - i, 2) * _qq(1 - a + 2 * n)
    return head * num / den


def _check_indices(n: int, idx: Sequence[int]) -> tuple[int, ...]:
    idx = tuple(int(x) for x in idx)
    if not idx:
        raise NonMonotoneIndices("at least one index is needed")
    if idx[0] > n or idx[-1] < 0 or any(x < y for x, y in zip(idx, idx[1:])):
        raise NonMonotoneIndices(f"need n >= i_1 >= ... >= i_k >= 0, got n={n}, indices={idx}")
    return idx


def _ratio(n: int, i: int) -> QRatio:
    return delta(2 * n) / delta(n + i)


def _chain(n: int, idx: tuple[int, ...], ratios: int) -> QRatio:
    v = ONE
    prev = n
    for pos, i in enumerate(idx):
        v = v * bubble_nann(n, prev, i)
        if pos < ratios:
            v = v * _ratio(n, i)
        prev = i
    return v


def _chain_closed(n: int, idx: tuple[int, ...], ratios: int) -> QRatio:
    k = len(idx)
    first, last = idx[0], idx[-1]
    e = Fraction(-k * n, 2) + sum(i * i + Fraction(i, 2) for i in idx)
    v = QRatio.monomial(e, (-1) ** (k * n + sum(idx)))
    v = v * _qq(n, 4 * k + 2) * _qq(3 * n - first + 1)
    v = v / (_qq(2 * n, k + 1) * _qq(2 * n + 1) * _qq(n - first) * _qq(n - last, 2) * _qq(last, 2))
    for prev, cur in zip(idx, idx[1:]):
        v = v * _qq(prev - cur + 2 * n + 1)
        v = v / (_qq(prev - cur) * _qq(n + prev) * _qq(n - prev, 2) * _qq(n + prev + 1))
    for i in idx[:ratios]:
        v = v * _ratio(n, i)
    return v


def coeff_E(n: int, indices: Sequence[int], method: str = "closed") -> QRatio:
    """Coefficient of an odd power of the half bubble; every factor carries its unknot ratio."""
    idx = _check_indices(n, indices)
    if method == "definitional":
        return _chain(n, idx, len(idx))
    if method == "closed":
        return _chain_closed(n, idx, len(idx))
    raise ValueError(f"unknown method {method!r}")


def coeff_P(n: int, indices: Sequence[int], method: str = "closed") -> QRatio:
    """Coefficient of an even power of the half bubble; the last factor has no unknot ratio."""
    idx = _check_indices(n, indices)
    if method == "definitional":
        return _chain(n, idx, len(idx) - 1)
    if method == "closed":
        return _chain_closed(n, idx, len(idx) - 1)
    raise ValueError(f"unknown method {method!r}")


def corner_coeff(n: int, i: int, j: int) -> QRatio:
    """Closed form of the ``i = 0`` bubble coefficient with colors ``(j, n; n, n - i)``."""
    head = QRatio.monomial(Fraction(i - n, 2), (-1) ** (n - i))
    num = _qq(i + j) * _qq(n) * _qq(n + i) * _qq(2 * n + j + 1)
    den = _qq(i) * _qq(2 * n) * _qq(j + n) * _qq(n + j + i + 1)
    return head * num / den


def middle_coeff(n: int, i: int, j: int) -> QRatio:
    """Closed form of the ``i = 0`` bubble coefficient with colors ``(j, i; n, n)`` times ``delta(i + j)``."""
    head = QRatio.monomial(Fraction(-(i + j + n), 2), (-1) ** (i + j + n))
    num = _qq(n) * _qq(j) * _qq(i) * _qq(n + j + i + 1)
    den = QRatio.binomial(1) * _qq(i + n) * _qq(j + n) * _qq(j + i)
    return head * num / den


def gamma_coeff(n: int, i: int, j: int, method: str = "closed") -> QRatio:
    """Value of the closing skein element carrying colors ``i`` and ``j``."""
    if not (0 <= i <= n and 0 <= j <= n):
        raise IndexOutOfRange(f"gamma_coeff needs 0 <= i, j <= n, got n={n}, i={i}, j={j}")
    if method == "closed":
        return _gamma_closed(n, i, j)
    if method == "assembled":
        return (
            bubble_general(i, n, n, n - j, 0)
            * bubble_general(j, n, n, n - i, 0)
            * bubble_general(j, i, n, n, 0)
            * delta(i + j)
        )
    if method == "factored":
        return corner_coeff(n, j, i) * corner_coeff(n, i, j) * middle_coeff(n, i, j)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _gamma_closed(n: int, i: int, j: int) -> QRatio:
    head = QRatio.monomial(Fraction(-3 * n, 2), (-1) ** n)
    num = _qq(i + j) * _qq(n, 3) * _qq(1 + i + 2 * n) * _qq(1 + j + 2 * n)
    den = QRatio.binomial(1) * _qq(2 * n, 2) * _qq(i + n) * _qq(j + n) * _qq(1 + i + j + n)
    return head * num / den


def c_coeff(n: int, i: int, k: int) -> QRatio:
    """Coefficient of the ``2i`` basis element in the ``k``-th power of the doubled box."""
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"c_coeff needs 0 <= i <= n, got n={n}, i={i}")
    if k < 1:
        raise PreconditionViolated("c_coeff needs k >= 1")
    return theta_coeff(2 * n, 2 * n, 2 * i) ** k / theta_coeff(n, n, 2 * i) ** (k + 1) * delta(2 * i)
