"""Tests for truncated EGF arithmetic, with independent oracles for the
derived expansions (long division, recurrences)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from degenpoly.bipoly import BiPoly, factorial
from degenpoly.series import (
    BadConstantTerm,
    DivisionByNonUnit,
    EgfSeries,
    IndexBeyondTruncation,
    NonzeroConstantInner,
    NonzeroLowOrder,
)

L = BiPoly.lam()
X = BiPoly.x()


def exp_t(order):
    return EgfSeries([Fraction(1, 1) / factorial(n) for n in range(order + 1)])


def log1p(order):
    return EgfSeries(
        [Fraction(0)] + [Fraction((-1) ** (n - 1), n) for n in range(1, order + 1)]
    )


rationals = st.builds(
    Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=6)
)
small_polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2)), rationals, max_size=3
).map(BiPoly)
series_of = lambda first: st.lists(small_polys, min_size=5, max_size=5).map(
    lambda cs: EgfSeries([first] + cs)
)


# -- arithmetic -----------------------------------------------------------------


def test_polynomial_product():
    one_plus = EgfSeries([1, 1, 0, 0])
    one_minus = EgfSeries([1, -1, 0, 0])
    assert (one_plus * one_minus) == EgfSeries([1, 0, -1, 0])


def test_additive_identity():
    f = EgfSeries([1, 2, 3])
    assert f + EgfSeries.zero(2) == f


def test_min_order_rule():
    f = EgfSeries([1, 1, 1, 1, 1])
    g = EgfSeries([1, 1])
    assert (f + g).order == 1
    assert (f * g).order == 1


@settings(max_examples=40)
@given(st.lists(small_polys, min_size=3, max_size=5), st.lists(small_polys, min_size=3, max_size=5))
def test_truncated_product_matches_exact_product(fc, gc):
    # Oracle: full polynomial convolution, then truncate.
    f, g = EgfSeries(fc), EgfSeries(gc)
    order = min(f.order, g.order)
    exact = [BiPoly.zero()] * (len(fc) + len(gc) - 1)
    for i, a in enumerate(fc):
        for j, b in enumerate(gc):
            exact[i + j] = exact[i + j] + a * b
    assert (f * g).coefficients == tuple(exact[: order + 1])


# -- division -------------------------------------------------------------------


def test_geometric_series():
    one = EgfSeries.one(5)
    one_plus_t = EgfSeries([1, 1, 0, 0, 0, 0])
    inv = one.divide(one_plus_t)
    assert [c.constant() for c in inv.coefficients] == [1, -1, 1, -1, 1, -1]


@settings(max_examples=40)
@given(series_of(BiPoly.const(1)))
def test_self_division_is_one(f):
    assert f.divide(f) == EgfSeries.one(f.order)


def test_t_over_log1p_against_long_division():
    # Oracle: naive long division of 1 by the shifted logarithm coefficients.
    order = 8
    denom = [Fraction((-1) ** n, n + 1) for n in range(order + 1)]
    quot = []
    for n in range(order + 1):
        acc = Fraction(1 if n == 0 else 0)
        for j in range(1, n + 1):
            acc -= denom[j] * quot[n - j]
        quot.append(acc / denom[0])
    series = EgfSeries.one(order).divide(log1p(order + 1).shift_div_t(1))
    assert [c.constant() for c in series.coefficients] == quot
    # First values: 1, 1/2, -1/6.
    assert [series.value(n).constant() for n in range(3)] == [
        Fraction(1),
        Fraction(1, 2),
        Fraction(-1, 6),
    ]


def test_division_requires_rational_unit():
    f = EgfSeries.one(3)
    with pytest.raises(DivisionByNonUnit):
        f.divide(EgfSeries.zero(3))
    with pytest.raises(DivisionByNonUnit):
        f.divide(EgfSeries([L, BiPoly.const(1), BiPoly.zero(), BiPoly.zero()]))


@settings(max_examples=40)
@given(series_of(BiPoly.const(1)), series_of(BiPoly.const(2)))
def test_divide_then_multiply_roundtrips(f, g):
    assert f.divide(g) * g == f


# -- t-shifts ----------------------------------------------------------------------


def test_shift_div_t():
    assert EgfSeries([0, 1, 1]).shift_div_t(1) == EgfSeries([1, 1])
    assert EgfSeries([0, 0, 1]).shift_div_t(2) == EgfSeries([1])
    shifted = log1p(6).shift_div_t(1)
    assert [c.constant() for c in shifted.coefficients] == [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 3),
        Fraction(-1, 4),
        Fraction(1, 5),
        Fraction(-1, 6),
    ]


def test_shift_div_t_errors():
    with pytest.raises(NonzeroLowOrder):
        EgfSeries([1, 1]).shift_div_t(1)
    with pytest.raises(IndexBeyondTruncation):
        EgfSeries([0, 1]).shift_div_t(2)
    with pytest.raises(ValueError):
        EgfSeries([0, 1]).shift_div_t(0)


# -- composition --------------------------------------------------------------------


def test_compose_inverse_pair():
    order = 10
    expm1 = exp_t(order) - EgfSeries.one(order)
    assert log1p(order).compose(expm1) == EgfSeries.t(order)


def test_compose_with_identity():
    f = EgfSeries([1, 2, 3, 4])
    assert f.compose(EgfSeries.t(3)) == f


def test_compose_rejects_nonzero_inner_constant():
    with pytest.raises(NonzeroConstantInner):
        EgfSeries([1, 1]).compose(EgfSeries([1, 1]))


@settings(max_examples=20)
@given(series_of(BiPoly.const(1)), series_of(BiPoly.zero()), series_of(BiPoly.zero()))
def test_compose_associativity(f, g, h):
    assert f.compose(g).compose(h) == f.compose(g.compose(h))


# -- exp, log, pow --------------------------------------------------------------------


def test_exp_of_t():
    assert EgfSeries.t(6).exp() == exp_t(6)


def test_exp_value_sequence_of_2t():
    doubled = EgfSeries.t(6).scale(2).exp()
    assert [doubled.value(n).constant() for n in range(7)] == [2**n for n in range(7)]


@settings(max_examples=40)
@given(series_of(BiPoly.zero()))
def test_log_inverts_exp(f):
    assert f.exp().log() == f


def test_exp_log_preconditions():
    with pytest.raises(BadConstantTerm):
        EgfSeries([1, 1]).exp()
    with pytest.raises(BadConstantTerm):
        EgfSeries([0, 1]).log()


def test_pow_square():
    assert EgfSeries([1, 1, 0]).pow(2) == EgfSeries([1, 2, 1])


def test_pow_root_roundtrip():
    one_plus_t = EgfSeries([1, 1, 0, 0, 0, 0])
    root = one_plus_t.pow(Fraction(1, 2))
    assert root.pow(2) == one_plus_t


@settings(max_examples=30)
@given(series_of(BiPoly.const(1)), st.integers(min_value=1, max_value=3))
def test_inverse_powers_cancel(f, k):
    assert f.pow(-k) * f.pow(k) == EgfSeries.one(f.order)


@settings(max_examples=30)
@given(series_of(BiPoly.const(1)), st.integers(min_value=0, max_value=4))
def test_integer_pow_matches_repeated_multiplication(f, k):
    product = EgfSeries.one(f.order)
    for _ in range(k):
        product = product * f
    assert f.pow(k) == product


def test_fractional_pow_needs_unit_constant():
    with pytest.raises(BadConstantTerm):
        EgfSeries([2, 1, 0]).pow(Fraction(1, 2))


# -- extraction and truncation -------------------------------------------------------


def test_value_extraction():
    e = exp_t(6)
    assert e.value(5) == BiPoly.const(1)
    assert e.value(0) == e.coefficient(0)


def test_bernoulli_value_via_recurrence_oracle():
    # Oracle: sum_{k=0..n} C(n+1, k) B_k = 0 with B_0 = 1.
    from degenpoly.bipoly import binomial

    order = 8
    bern = [Fraction(1)]
    for n in range(1, order + 1):
        acc = sum(binomial(n + 1, k) * bern[k] for k in range(n))
        bern.append(-acc / binomial(n + 1, n))
    kernel = EgfSeries.one(order).divide(
        (exp_t(order + 1) - EgfSeries.one(order + 1)).shift_div_t(1)
    )
    assert [kernel.value(n).constant() for n in range(order + 1)] == bern
    assert kernel.value(2).constant() == Fraction(1, 6)


def test_value_beyond_truncation():
    with pytest.raises(IndexBeyondTruncation):
        EgfSeries([1, 1]).value(2)


def test_truncate():
    f = EgfSeries([1, 2, 3, 4])
    assert f.truncate(1) == EgfSeries([1, 2])
    with pytest.raises(IndexBeyondTruncation):
        f.truncate(5)


def test_empty_series_rejected():
    with pytest.raises(ValueError):
        EgfSeries([])
