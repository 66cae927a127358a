"""Ramanujan's two-variable theta function and its false counterpart.

Both are double sums over ``i`` of ``a**(i(i+1)/2) * b**(i(i-1)/2)`` and the
term with ``a`` and ``b`` swapped in the exponents; the theta function adds
the second family, the false theta function subtracts it.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonConvergent
from .qfun import SignedMonomial
from .series import TruncatedSeries


def _check(a: SignedMonomial, b: SignedMonomial) -> None:
    # exponent of the i-th term is ((ha + hb) i**2 +- (ha - hb) i) / 4
    if a.halfexp + b.halfexp <= 0:
        raise NonConvergent(f"term exponents of ({a}, {b}) do not grow without bound")


def _term(a: SignedMonomial, b: SignedMonomial, pa: int, pb: int) -> tuple[int, int]:
    sa, ea = a.power(pa)
    sb, eb = b.power(pb)
    return sa * sb, ea + eb


def _two_sums(a: SignedMonomial, b: SignedMonomial, trunc, joiner: int) -> TruncatedSeries:
    _check(a, b)
    limit = 2 * Fraction(trunc)  # in half-exponent units
    terms: dict[int, int] = {}

    def add(sign: int, h: int) -> None:
        if h < limit:
            terms[h] = terms.get(h, 0) + sign

    add(1, 0)
    i = 1
    while True:
        s1, h1 = _term(a, b, i * (i + 1) // 2, i * (i - 1) // 2)
        s2, h2 = _term(a, b, i * (i - 1) // 2, i * (i + 1) // 2)
        add(s1, h1)
        add(joiner * s2, h2)
        # steps to i + 1 are (ha + hb) i + ha and (ha + hb) i + hb
        rising = (a.halfexp + b.halfexp) * i + min(a.halfexp, b.halfexp) > 0
        if rising and min(h1, h2) >= limit:
            break
        i += 1
    s = TruncatedSeries.from_dict({Fraction(h, 2): c for h, c in terms.items()}, trunc=trunc, grid=2)
    return s.compact()


def false_theta(a: SignedMonomial, b: SignedMonomial, trunc) -> TruncatedSeries:
    """False theta function of ``(a, b)`` known strictly below ``q**trunc``."""
    return _two_sums(a, b, trunc, -1)


def ramanujan_theta(a: SignedMonomial, b: SignedMonomial, trunc) -> TruncatedSeries:
    """Theta function of ``(a, b)`` known strictly below ``q**trunc``."""
    return _two_sums(a, b, trunc, +1)
