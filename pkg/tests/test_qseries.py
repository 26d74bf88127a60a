"""Exact series arithmetic and q-Pochhammer building blocks."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stable_jones.qseries import (
    BadConstantTerm,
    NotAUnit,
    TruncSeries,
    cyclotomic_power,
    euler_power,
    invert_unit,
    pochhammer,
    product_exponents,
)


def S(*coeffs: int, order: int | None = None) -> TruncSeries:
    n = (len(coeffs) - 1) if order is None else order
    return TruncSeries(n, coeffs)


def test_constructor_pads_and_truncates():
    f = TruncSeries(4, (1, 2))
    assert list(f) == [1, 2, 0, 0, 0]
    g = TruncSeries(1, (1, 2, 3, 4))
    assert list(g) == [1, 2]


def test_ring_axioms_small():
    f = S(1, -1, -1, 0, 0, 1)
    one = TruncSeries.one(5)
    zero = TruncSeries.zero(5)
    assert f * one == f
    assert f + zero == f
    assert f - f == zero
    assert (-f) + f == zero


def test_mul_truncates_to_smaller_order():
    f = TruncSeries(5, (1, 1, 1, 1, 1, 1))
    g = TruncSeries(2, (1, -1))
    h = f * g
    assert h.order == 2
    assert list(h) == [1, 0, 0]


def test_geometric_series_times_one_minus_q():
    n = 9
    geom = TruncSeries(n, [1] * (n + 1))
    one_minus_q = TruncSeries(n, (1, -1))
    assert geom * one_minus_q == TruncSeries.one(n)
    assert invert_unit(one_minus_q) == geom


def test_invert_unit_rejects_nonunit():
    with pytest.raises(NotAUnit):
        invert_unit(S(2, 1, 1))
    with pytest.raises(NotAUnit):
        invert_unit(S(0, 1))


def test_invert_unit_negative_constant():
    f = S(-1, 3, -2, 1, 7, 0, 2)
    assert f * invert_unit(f) == TruncSeries.one(6)


def test_pochhammer_small_cases():
    assert pochhammer(0, 5) == TruncSeries.one(5)
    # (1-q)(1-q^2) = 1 - q - q^2 + q^3
    assert pochhammer(2, 3) == S(1, -1, -1, 1)
    # factors beyond the order are invisible
    assert pochhammer(7, 5) == pochhammer(100, 5)


def test_euler_series_matches_direct_product():
    # pentagonal expansion against the plain finite product, two routes
    n = 30
    assert euler_power(1, n) == pochhammer(n, n)


def test_euler_series_prefix():
    assert euler_power(1, 10) == S(1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0)


def test_euler_power_inverse_pairs():
    n = 12
    for e in (1, 2, 5):
        assert euler_power(e, n) * euler_power(-e, n) == TruncSeries.one(n)
    assert euler_power(0, n) == TruncSeries.one(n)


def test_euler_power_is_multiplicative():
    n = 10
    assert euler_power(2, n) * euler_power(3, n) == euler_power(5, n)


def test_cyclotomic_power_cases():
    assert cyclotomic_power(1, 1, 4) == S(1, -1, 0, 0, 0)
    assert cyclotomic_power(2, -1, 6) == S(1, 0, 1, 0, 1, 0, 1)
    assert cyclotomic_power(3, 2, 6) == S(1, 0, 0, -2, 0, 0, 1)
    with pytest.raises(ValueError):
        cyclotomic_power(0, 1, 4)


def test_product_exponents_known_values():
    # the Euler product itself has every exponent 1
    f = euler_power(1, 5)
    assert product_exponents(f, 5) == [1, 1, 1, 1, 1]
    # 1 + q = (1-q)^{-1} (1-q^2)
    g = S(1, 1, 0)
    assert product_exponents(g, 2) == [-1, 1]
    assert product_exponents(TruncSeries.one(4), 4) == [0, 0, 0, 0]


def test_product_exponents_requires_unit_one():
    with pytest.raises(BadConstantTerm):
        product_exponents(S(-1, 1), 1)
    with pytest.raises(ValueError):
        product_exponents(S(1, 1), 5)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(min_value=-6, max_value=6), min_size=1, max_size=12))
def test_product_exponents_round_trip(tail):
    n = len(tail)
    f = TruncSeries(n, [1] + tail)
    exps = product_exponents(f, n)
    g = TruncSeries.one(n)
    for k, e in enumerate(exps, start=1):
        if e:
            g = g * cyclotomic_power(k, e, n)
    assert g == f


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=10),
    st.lists(st.integers(min_value=-9, max_value=9), min_size=1, max_size=10),
)
def test_mul_commutes(a, b):
    n = max(len(a), len(b))
    f = TruncSeries(n, a)
    g = TruncSeries(n, b)
    assert f * g == g * f


def test_shift_and_monomial():
    f = S(1, 2, 3, order=4)
    assert f.shift(2) == S(0, 0, 1, 2, 3, order=4)
    assert TruncSeries.monomial(4, 2, 7) == S(0, 0, 7, order=4)
    assert TruncSeries.monomial(3, 9) == TruncSeries.zero(3)


def test_json_round_trip_uses_decimal_strings():
    f = S(1, -(10**30), 42)
    text = f.to_json()
    assert str(-(10**30)) in text
    assert TruncSeries.from_json(text) == f


def test_pow_matches_repeated_multiplication():
    f = S(1, -1, 2, 0, 3)
    g = TruncSeries.one(4)
    for _ in range(6):
        g = g * f
    assert f.pow(6) == g
    assert f.pow(0) == TruncSeries.one(4)
    assert f.pow(-2) == invert_unit(f) * invert_unit(f)
