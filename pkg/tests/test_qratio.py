from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qtail.qratio import ONE, ZERO, QRatio, common_fraction, exact_sum, window_sum
from qtail.series import TruncatedSeries, as_series

from _oracle import qratio_at

powers = st.dictionaries(st.integers(1, 6), st.integers(-3, 3), max_size=4)
exps = st.integers(-8, 8).map(lambda h: Fraction(h, 4))


@st.composite
def ratios(draw):
    return QRatio.build(draw(st.sampled_from([1, -1])), draw(exps), draw(powers))


def test_canonical_factors():
    r = QRatio.build(-3, Fraction(1, 2), {2: 1, 1: 0, 3: -2})
    assert r.sign == -1 and r.factors == ((2, 1), (3, -2))
    assert QRatio.build(0, 5) == ZERO and ZERO.is_zero
    with pytest.raises(ValueError):
        QRatio.build(1, 0, {0: 1})


def test_grid_of_exponent():
    assert QRatio.monomial(Fraction(3, 4)).grid == 4
    with pytest.raises(ValueError):
        QRatio.monomial(Fraction(1, 3)).grid


def test_laurent_and_series():
    # (1 - q^2) / (1 - q) = 1 + q
    r = QRatio.binomial(2) / QRatio.binomial(1)
    assert r.is_laurent_polynomial and r.laurent() == as_series([1, 1])
    g = QRatio.binomial(1).inverse()
    assert not g.is_laurent_polynomial
    with pytest.raises(ValueError):
        g.laurent()
    assert g.series(5) == as_series([1] * 5, trunc=5)


def test_series_below_fractional_window():
    r = QRatio.monomial(Fraction(-1, 2)) * QRatio.binomial(1).inverse()
    s = r.series_below(2)
    assert s.grid == 2 and s.trunc == 4
    assert s.terms() == [(Fraction(-1, 2), 1), (Fraction(1, 2), 1), (Fraction(3, 2), 1)]


def test_equality_with_series():
    assert QRatio.qq(2) == as_series([1, -1, -1, 1])
    assert QRatio.binomial(1).inverse() != as_series([1])
    assert ONE == 1 and ZERO == 0 and -ONE == -1


@given(ratios(), ratios())
def test_field_operations(a, b):
    assert (a * b) / b == a
    assert a * a.inverse() == ONE
    assert (a * b) == (b * a)
    assert (a ** 3) == a * a * a
    assert (a ** -1) == a.inverse()


@given(ratios(), st.integers(2, 5))
def test_evaluation_is_multiplicative(a, k):
    t = Fraction(2, 3)
    assert qratio_at(a ** k, t) == qratio_at(a, t) ** k


@given(st.lists(ratios(), min_size=1, max_size=5), st.integers(1, 12))
def test_window_sum_matches_termwise_expansion(terms, width):
    lo = min(t.qexp for t in terms)
    s = window_sum(terms, width)
    ref = TruncatedSeries.zero(4, int(4 * (lo + width)))
    for t in terms:
        ref = ref + t.series_below(lo + width)
    assert s.same_known(ref)


@given(st.lists(ratios(), min_size=1, max_size=5))
def test_common_fraction_evaluates_correctly(terms):
    num, den = common_fraction(terms)
    t = Fraction(3, 5)
    n_val = sum(Fraction(c) * t ** int(4 * e) for e, c in num.terms())
    assert all(m > 0 for _, m in den.factors)
    assert n_val / qratio_at(den, t) == sum(qratio_at(x, t) for x in terms)


def test_exact_sum():
    # 1/(1-q) - q/(1-q) = 1
    terms = [QRatio.binomial(1).inverse(), -QRatio.monomial(1) / QRatio.binomial(1)]
    assert exact_sum(terms) == TruncatedSeries.one()
    with pytest.raises(ValueError):
        exact_sum([QRatio.binomial(1).inverse()])
    assert exact_sum([]).is_zero
