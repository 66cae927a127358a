"""Tail series for the torus, pretzel and ``L_k`` families.

Every tail is an infinite nested sum.  Summands carry a monomial ``q**E``
whose exponent grows quadratically in the indices, so each nesting level is
cut off as soon as the smallest exponent any completion could reach is at or
beyond the truncation.  Coefficients are exact integers throughout.

Work is done on dense coefficient lists starting at ``q**0``; the outermost
index can be farmed out to worker processes, and the partial sums are added
back in index order.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache, partial

from . import _coeffs
from .errors import PreconditionViolated
from .qfun import euler, qq, qq_reciprocal
from .series import TruncatedSeries


class TailFamily(enum.Enum):
    TORUS_EVEN = "torus-even"
    TORUS_ODD = "torus-odd"
    PHI = "phi"
    LK_PRODUCT = "lk-product"
    LK_MULTISUM = "lk-multisum"


@dataclass(frozen=True)
class TailSpec:
    """A family together with its parameters and the truncation to evaluate at."""

    family: TailFamily
    k: int
    u: int | None = None
    trunc: int = 100

    def __post_init__(self):
        fam = TailFamily(self.family)
        object.__setattr__(self, "family", fam)
        low = 2 if fam is TailFamily.TORUS_EVEN else 1
        if self.k < low:
            raise PreconditionViolated(f"{fam.value} needs k >= {low}, got {self.k}")
        if fam is TailFamily.PHI:
            if self.u is None or self.u < 1:
                raise PreconditionViolated("phi needs u >= 1")
        elif self.u is not None:
            raise PreconditionViolated(f"{fam.value} takes no u parameter")

    def evaluate(self, jobs: int = 1) -> TruncatedSeries:
        fam = self.family
        if fam is TailFamily.TORUS_EVEN:
            return tail_torus_even(self.k, self.trunc, jobs=jobs)
        if fam is TailFamily.TORUS_ODD:
            return tail_torus_odd(self.k, self.trunc, jobs=jobs)
        if fam is TailFamily.PHI:
            return tail_phi(self.k, self.u, self.trunc, jobs=jobs)
        if fam is TailFamily.LK_PRODUCT:
            return tail_lk_product(self.k, self.trunc, jobs=jobs)
        return tail_lk_multisum(self.k, self.trunc, jobs=jobs)


# -- dense helpers ---------------------------------------------------------


@lru_cache(maxsize=4096)
def _recip_full(n: int, trunc: int) -> tuple[int, ...]:
    return tuple(qq_reciprocal(n, trunc).window(0, trunc))


def _recip(n: int, width: int, trunc: int) -> list[int]:
    """First ``width`` coefficients of ``1/(q;q)_n``."""
    return list(_recip_full(n, trunc)[:width])


def _times(p: list[int], f: list[int], width: int) -> list[int]:
    return _coeffs.mul(p, f[:width], width) if width > 0 else []


def _add_at(acc: list[int], part: list[int], shift: int) -> None:
    for t, c in enumerate(part):
        if c:
            acc[shift + t] += c


def _dense(s: TruncatedSeries, trunc: int) -> list[int]:
    return list(s.window(0, trunc))


def _finish(acc: list[int], trunc: int, euler_power: int) -> TruncatedSeries:
    out = acc
    if euler_power:
        e = _dense(euler(trunc), trunc)
        for _ in range(euler_power):
            out = _coeffs.mul(out, e, trunc)
    return TruncatedSeries.from_coeffs(out, 0, 1, trunc)


def _map(fn, items, jobs: int):
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _reduce(parts: list[list[int]], trunc: int) -> list[int]:
    acc = [0] * trunc
    for p in parts:
        _add_at(acc, p, 0)
    return acc


# -- chained sums ---------------------------------------------------------
#
# sum over l_1..l_m >= 0 of q**(sum_j i_j (i_j + 1)) / prod_j (q;q)_{l_j},
# with i_j = l_j + ... + l_m and the last denominator optionally squared.
# The recursion runs from l_m (outermost) down to l_1.


def _chain_inner(acc, level, i_next, e, part, trunc, square_last, m):
    for l in range(trunc):
        i = i_next + l
        e2 = e + i * (i + 1)
        # every index below this level is at least i
        if e2 + (level - 1) * i * (i + 1) >= trunc:
            break
        width = trunc - e2
        p = _times(part, _recip(l, width, trunc), width)
        if square_last and level == m:
            p = _times(p, _recip(l, width, trunc), width)
        if level == 1:
            _add_at(acc, p, e2)
        else:
            _chain_inner(acc, level - 1, i, e2, p, trunc, square_last, m)


def _chain_top(l_top: int, m: int, trunc: int, square_last: bool) -> list[int]:
    """Contribution of all tuples with ``l_m = l_top``."""
    acc = [0] * trunc
    e = l_top * (l_top + 1)
    if e + (m - 1) * e >= trunc:
        return acc
    width = trunc - e
    p = _recip(l_top, width, trunc)
    if square_last:
        p = _times(p, _recip(l_top, width, trunc), width)
    if m == 1:
        _add_at(acc, p, e)
    else:
        _chain_inner(acc, m - 1, l_top, e, p, trunc, square_last, m)
    return acc


def _top_range(m: int, trunc: int) -> list[int]:
    out = []
    l = 0
    while m * l * (l + 1) < trunc:
        out.append(l)
        l += 1
    return out


def _chain_sum(m: int, trunc: int, square_last: bool, jobs: int) -> list[int]:
    if trunc <= 0:
        return []
    if m == 0:
        return [1] + [0] * (trunc - 1)
    fn = partial(_chain_top, m=m, trunc=trunc, square_last=square_last)
    return _reduce(_map(fn, _top_range(m, trunc), jobs), trunc)


def tail_torus_odd(k: int, trunc: int, jobs: int = 1) -> TruncatedSeries:
    """Tail of the ``(2, 2k+1)`` torus knot as a ``(k-1)``-fold sum times ``(q;q)_oo``."""
    if k < 1:
        raise PreconditionViolated("tail_torus_odd needs k >= 1")
    return _finish(_chain_sum(k - 1, trunc, False, jobs), trunc, 1)


def tail_torus_even(k: int, trunc: int, jobs: int = 1) -> TruncatedSeries:
    """Tail of the ``(2, 2k)`` torus link: the odd sum with the last denominator squared."""
    if k < 2:
        raise PreconditionViolated("tail_torus_even needs k >= 2")
    return _finish(_chain_sum(k - 1, trunc, True, jobs), trunc, 1)


# -- the two-chain family ---------------------------------------------------


def _chain_by_top(m: int, trunc: int, jobs: int) -> list[list[int]]:
    """Chain sums with the last denominator squared, split by the value of ``l_m``."""
    fn = partial(_chain_top, m=m, trunc=trunc, square_last=True)
    return _map(fn, _top_range(m, trunc), jobs)


def _phi_row(a: int, left: list[list[int]], right: list[list[int]], trunc: int, final: bool) -> list[int]:
    acc = [0] * trunc
    for b, g in enumerate(right):
        if final:
            g = _coeffs.mul(g, _dense(qq(a + b), trunc), trunc)
        _add_at(acc, _coeffs.mul(left[a], g, trunc), 0)
    return acc


def tail_phi(k: int, u: int, trunc: int, jobs: int = 1, drop_final_pochhammer: bool = False) -> TruncatedSeries:
    """Tail of the pretzel knot ``P(2k+1, 2, 2u+1)``.

    Two chained sums of lengths ``k`` and ``u`` joined by ``(q;q)_{l_k + p_u}``,
    the factor tying their outermost indices together.  With
    ``drop_final_pochhammer`` the joining factor is left out, which splits the
    tail into a product of two torus-type sums.
    """
    if k < 1 or u < 1:
        raise PreconditionViolated("tail_phi needs k, u >= 1")
    if trunc <= 0:
        return TruncatedSeries.zero(1, trunc)
    left = _chain_by_top(k, trunc, jobs)
    right = left if u == k else _chain_by_top(u, trunc, jobs)
    fn = partial(_phi_row, left=left, right=right, trunc=trunc, final=not drop_final_pochhammer)
    acc = _reduce(_map(fn, range(len(left)), jobs), trunc)
    return _finish(acc, trunc, 2)


# -- L_k --------------------------------------------------------------------


def _lk_product_term(i: int, k: int, trunc: int) -> list[int]:
    acc = [0] * trunc
    width = trunc - i
    p = _recip(i, width, trunc)
    for _ in range(k):
        p = _times(p, _recip(i, width, trunc), width)
    _add_at(acc, p, i)
    return acc


def tail_lk_product(k: int, trunc: int, jobs: int = 1) -> TruncatedSeries:
    """``(q;q)_oo**(k+1) * sum_i q**i / (q;q)_i**(k+1)``."""
    if k < 1:
        raise PreconditionViolated("tail_lk_product needs k >= 1")
    if trunc <= 0:
        return TruncatedSeries.zero(1, trunc)
    fn = partial(_lk_product_term, k=k, trunc=trunc)
    return _finish(_reduce(_map(fn, range(trunc), jobs), trunc), trunc, k + 1)


def _lk_inner(acc, level, k, total, e, part, trunc):
    # picks i_level; exponent gains i + i**2 + i * (i_1 + ... + i_{level-1})
    for i in range(trunc):
        e2 = e + i + i * i + i * total
        if e2 >= trunc:
            break
        width = trunc - e2
        s = total + i
        p = _times(part, _recip(i, width, trunc), width)
        p = _times(p, _recip(s, width, trunc), width)
        if level == k:
            _add_at(acc, p, e2)
        else:
            _lk_inner(acc, level + 1, k, s, e2, p, trunc)


def _lk_multisum_top(i1: int, k: int, trunc: int) -> list[int]:
    acc = [0] * trunc
    e = i1 + i1 * i1
    if e >= trunc:
        return acc
    width = trunc - e
    p = _recip(i1, width, trunc)
    p = _times(p, _recip(i1, width, trunc), width)
    if k == 1:
        _add_at(acc, p, e)
    else:
        _lk_inner(acc, 2, k, i1, e, p, trunc)
    return acc


def tail_lk_multisum(k: int, trunc: int, jobs: int = 1) -> TruncatedSeries:
    """The ``k``-fold sum form of the ``L_k`` tail, times ``(q;q)_oo**k``."""
    if k < 1:
        raise PreconditionViolated("tail_lk_multisum needs k >= 1")
    if trunc <= 0:
        return TruncatedSeries.zero(1, trunc)
    tops = [i for i in range(trunc) if i + i * i < trunc]
    fn = partial(_lk_multisum_top, k=k, trunc=trunc)
    return _finish(_reduce(_map(fn, tops, jobs), trunc), trunc, k)


def tail_8_5(trunc: int) -> TruncatedSeries:
    """The published double sum for the ``8_5`` tail, evaluated term by term.

    Deliberately independent of the chained-sum machinery above: plain
    series arithmetic on ``q**(i + i**2 + j + j**2) (q;q)_{i+j} / ((q;q)_i (q;q)_j)**2``.
    """
    total = TruncatedSeries.zero(1, trunc)
    i = 0
    while i + i * i < trunc:
        j = 0
        while i + i * i + j + j * j < trunc:
            e = i + i * i + j + j * j
            width = trunc - e
            den = qq_reciprocal(i, width) * qq_reciprocal(i, width) * qq_reciprocal(j, width) * qq_reciprocal(j, width)
            total = total + (qq(i + j) * den).shift(e)
            j += 1
        i += 1
    return total * euler(trunc) * euler(trunc)
