"""Finite-color skein evaluations and their agreement with the tails.

For color ``n`` the all-B skein element of each graph family is a finite sum
of products of theta values, bubble coefficients and unknot values.  The sums
are built here as lists of exact :class:`~qtail.qratio.QRatio` terms.  They are
rational functions of ``q**(1/2)`` rather than Laurent polynomials (already
``delta(2)**2 / delta(1)**2`` is not one), so the ``skein_eval_*`` functions
return expansions in a window above the lowest exponent; the exact value is
``common_fraction(<family>_terms(...))``.  Dividing by ``delta(n)`` and stripping sign and
leading monomial must then reproduce the tail through ``n`` coefficients.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InsufficientTruncation, PreconditionViolated
from .qratio import QRatio, common_fraction, window_sum
from .series import ComparisonReport, TruncatedSeries, agree_up_to, normalize_tail
from .skein import bubble_nann, bubble_sym, coeff_P, delta, gamma_coeff, theta_coeff
from .tails import TailFamily, TailSpec


def _check(n: int, *ks: int) -> None:
    if n < 1 or any(k < 1 for k in ks):
        raise PreconditionViolated(f"need n >= 1 and positive family parameters, got n={n}, {ks}")


def _monotone(n: int, k: int):
    """Tuples ``n >= i_1 >= ... >= i_k >= 0``."""
    for t in itertools.combinations_with_replacement(range(n, -1, -1), k):
        yield t


# -- term lists -------------------------------------------------------------


def lk_theta_terms(n: int, k: int) -> list[QRatio]:
    _check(n, k)
    out = []
    for i in range(n + 1):
        r = theta_coeff(2 * n, 2 * n, 2 * i) / theta_coeff(n, n, 2 * i)
        out.append(r ** (k + 1) * delta(2 * i))
    return out


def lk_bubble_terms(n: int, k: int, printed_bound: bool = False) -> list[QRatio]:
    """Terms of the nested bubble expansion with ``k`` bubbles.

    The closing unknot ratio uses ``delta(n + i_1 + ... + i_k)``; with
    ``printed_bound`` the sum stops at ``i_{k-1}`` instead.
    """
    _check(n, k)
    out = []
    close = delta(2 * n) * delta(2 * n)

    def walk(idx: list[int], used: int) -> None:
        if len(idx) == k:
            v = bubble_nann(n, n, idx[0])
            for j in range(1, k):
                v = v * bubble_sym(n, sum(idx[:j]), idx[j])
            top = sum(idx[: k - 1]) if printed_bound else used
            out.append(v * close / delta(n + top))
            return
        for i in range(n - used + 1):
            walk(idx + [i], used + i)

    walk([], 0)
    return out


def phi_terms(n: int, k: int, u: int) -> list[QRatio]:
    _check(n, k, u)
    left = [(t[-1], coeff_P(n, t) * delta(2 * n) / delta(n + t[-1])) for t in _monotone(n, k)]
    right = left if u == k else [(s[-1], coeff_P(n, s) * delta(2 * n) / delta(n + s[-1])) for s in _monotone(n, u)]
    return [a * b * gamma_coeff(n, i, j) for i, a in left for j, b in right]


# -- evaluations --------------------------------------------------------------


DEFAULT_WIDTH = 50


def skein_eval_lk_theta(n: int, k: int, width: int = DEFAULT_WIDTH) -> TruncatedSeries:
    """All-B skein value of ``L_k`` at color ``n`` through theta values.

    Known for ``width`` powers of ``q`` past the lowest exponent of any term.
    """
    return window_sum(lk_theta_terms(n, k), width)


def skein_eval_lk_bubble(n: int, k: int, width: int = DEFAULT_WIDTH, printed_bound: bool = False) -> TruncatedSeries:
    """All-B skein value of ``L_k`` through nested bubble expansions."""
    return window_sum(lk_bubble_terms(n, k, printed_bound), width)


def skein_eval_phi(n: int, k: int, u: int, width: int = DEFAULT_WIDTH) -> TruncatedSeries:
    """All-B skein value of the two-chain graph with chain lengths ``k`` and ``u`` at color ``n``.

    The overall ``1 / delta(n)`` is left out here; :func:`normalized_skein`
    divides every family by ``delta(n)`` in the same way.
    """
    return window_sum(phi_terms(n, k, u), width)


@dataclass(frozen=True)
class RouteReport:
    """Comparison of the theta and bubble evaluations of ``L_k``."""

    n: int
    k: int
    printed_bound_equal: bool
    corrected_bound_equal: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "printed_bound_equal": self.printed_bound_equal,
            "corrected_bound_equal": self.corrected_bound_equal,
        }


def _same(a: list[QRatio], b: list[QRatio]) -> bool:
    num, _ = common_fraction(a + [-x for x in b])
    return num.is_zero


def route_report(n: int, k: int) -> RouteReport:
    """Exact comparison of both routes, with both choices of closing index bound."""
    theta = lk_theta_terms(n, k)
    return RouteReport(
        n,
        k,
        _same(theta, lk_bubble_terms(n, k, printed_bound=True)),
        _same(theta, lk_bubble_terms(n, k, printed_bound=False)),
    )


# -- agreement with the tails ------------------------------------------------------


def _terms_for(spec: TailSpec, n: int) -> list[QRatio]:
    fam = spec.family
    if fam is TailFamily.PHI:
        return phi_terms(n, spec.k, spec.u)
    if fam in (TailFamily.LK_PRODUCT, TailFamily.LK_MULTISUM):
        return lk_theta_terms(n, spec.k)
    raise PreconditionViolated(f"no skein evaluation is implemented for {fam.value}")


def _sum_chunk(args) -> TruncatedSeries:
    terms, width, lo = args
    return window_sum(terms, width, lo)


def normalized_skein(spec: TailSpec, n: int, terms_needed: int | None = None, jobs: int = 1) -> TruncatedSeries:
    """``S / delta(n)`` with sign and leading monomial stripped.

    The expansion window is doubled until at least ``terms_needed`` (default
    ``n + 1``) coefficients of the normalized value are known.
    """
    need = n + 1 if terms_needed is None else terms_needed
    inv = delta(n).inverse()
    terms = [t * inv for t in _terms_for(spec, n)]
    lo = min(t.qexp for t in terms)
    width = need + 2
    while True:
        if jobs > 1 and len(terms) > jobs:
            chunks = [(terms[i::jobs], width, lo) for i in range(jobs)]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = list(pool.map(_sum_chunk, chunks))
            s = parts[0]
            for p in parts[1:]:
                s = s + p
        else:
            s = window_sum(terms, width, lo)
        if not s.is_zero:
            norm, _, _ = normalize_tail(s)
            if norm.trunc is None or norm.trunc >= need * norm.grid:
                return norm
        width *= 2


def stabilization_check(spec: TailSpec, n: int, jobs: int = 1) -> ComparisonReport:
    """Compare the normalized color-``n`` skein value with the tail through ``n`` terms."""
    if n < 1:
        raise PreconditionViolated("n must be >= 1")
    if spec.trunc < n:
        raise InsufficientTruncation(f"tail truncation {spec.trunc} is below the requested window {n}")
    s = normalized_skein(spec, n, jobs=jobs)
    return agree_up_to(s, spec.evaluate(jobs=jobs), n)


def consecutive_check(spec: TailSpec, n: int, jobs: int = 1) -> ComparisonReport:
    """Compare normalized skein values at colors ``n`` and ``n + 1`` through ``n`` terms."""
    a = normalized_skein(spec, n, jobs=jobs)
    b = normalized_skein(spec, n + 1, jobs=jobs)
    return agree_up_to(a, b, n)
