import json

import pytest
from hypothesis import given, settings, strategies as st

from qtq.qt_algebra import (
    ONE,
    ZERO,
    OrderMismatch,
    QPoly,
    TSeries,
    expand_product,
    qpoly_add,
    qpoly_mul,
    series_eq,
    series_mul,
)

from oracles import dict_product, series_as_dict


def P(*coeffs):
    return QPoly({e: c for e, c in enumerate(coeffs)})


def test_qpoly_add_examples():
    assert qpoly_add(P(0, 1), P(1)) == P(1, 1)
    assert qpoly_add(QPoly({2: 1}), QPoly({2: -1})) == ZERO
    assert qpoly_add(QPoly({2: 1}), QPoly({2: -1})).coeffs == {}
    assert qpoly_add(P(1, 1), P(0, 1, 1)) == P(1, 2, 1)


def test_qpoly_mul_examples():
    assert qpoly_mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert qpoly_mul(P(3, 0, 7), ZERO) == ZERO
    assert qpoly_mul(P(1, 1), P(1, -1)) == P(1, 0, -1)


def test_qpoly_rejects_negative_exponent():
    with pytest.raises(ValueError):
        QPoly({-1: 1})
    with pytest.raises(ValueError):
        P(0, 1).shift(-2)


def test_no_zero_coefficients_stored():
    assert QPoly({0: 0, 3: 0}).coeffs == {}


def test_big_integers_survive_json():
    big = 3 ** 90
    s = TSeries.from_list([QPoly({1: big}), -big], order=2)
    text = json.dumps(s.to_json())
    assert str(big) in text
    assert TSeries.from_json(json.loads(text)) == s


def test_json_schema_shape():
    s = TSeries.from_list([1, P(0, 2)], order=1)
    assert s.to_json() == {"order": 1, "coeffs": [[[0, "1"]], [[1, "2"]]]}


def test_series_mul_examples():
    one_plus_t = TSeries.from_list([1, 1], 1)
    one_minus_t = TSeries.from_list([1, -1], 1)
    assert series_mul(one_plus_t, one_minus_t) == TSeries.one(1)

    a = TSeries.from_list([P(1, 2), 0, P(0, 0, 5)], 2)
    assert series_mul(a, TSeries.one(2)) == a

    geometric = TSeries.from_list([1] * 6, 5)
    assert series_mul(geometric, TSeries.from_list([1, -1], 5)) == TSeries.one(5)


def test_series_mul_rejects_mismatched_orders():
    with pytest.raises(OrderMismatch):
        series_mul(TSeries.one(2), TSeries.one(3))
    with pytest.raises(OrderMismatch):
        series_eq(TSeries.one(2), TSeries.one(3))


def test_expand_product_examples():
    assert expand_product([(0, 1, -1)], 3) == TSeries.from_list([1, 1, 1, 1], 3)
    expected = TSeries.from_list([1, 1, P(1, 1)], 2)
    assert expand_product([(1, 2, -1), (0, 1, -1)], 2) == expected
    # product side of the (1,1) identity at order 2: odd parts free, q per even part
    assert expand_product([(0, 1, -1), (1, 2, -1)], 2) == expected


def test_expand_product_rejects_constant_factor():
    with pytest.raises(ValueError):
        expand_product([(1, 0, -1)], 4)


def test_expand_product_ignores_factors_past_order():
    assert expand_product([(0, 9, -1), (3, 7, 1)], 5) == TSeries.one(5)


def test_series_eq_reports_first_mismatch():
    a = TSeries.from_list([1, 1], 1)
    assert series_eq(a, a) == (True, None)
    ok, mm = series_eq(a, TSeries.one(1))
    assert not ok
    assert mm.t_exp == 1 and mm.lhs == ONE and mm.rhs == ZERO


def test_shift_t_truncates():
    a = TSeries.from_list([1, 2, 3], 2)
    assert a.shift_t(1) == TSeries.from_list([0, 1, 2], 2)
    assert a.shift_t(5) == TSeries.zero(2)


small_poly = st.dictionaries(st.integers(0, 4), st.integers(-5, 5), max_size=4).map(QPoly)
factor = st.tuples(st.integers(0, 3), st.integers(1, 6), st.sampled_from([1, -1]))


def series_of(order):
    return st.lists(small_poly, min_size=order + 1, max_size=order + 1).map(
        lambda cs: TSeries(order, tuple(cs)))


@given(small_poly, small_poly, small_poly)
def test_qpoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50)
@given(series_of(4), series_of(4), series_of(4))
def test_series_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.lists(factor, max_size=6), st.integers(0, 10))
def test_product_times_inverse_is_one(factors, order):
    inverse = [(a, b, -e) for a, b, e in factors]
    assert expand_product(factors, order) * expand_product(inverse, order) == TSeries.one(order)


@given(st.lists(factor, max_size=5), st.integers(0, 9))
def test_expand_product_matches_naive_convolution(factors, order):
    assert series_as_dict(expand_product(factors, order)) == dict_product(factors, order)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(1, 6)), max_size=6), st.integers(0, 12))
def test_counting_products_have_nonnegative_coefficients(pairs, order):
    s = expand_product([(a, b, -1) for a, b in pairs], order)
    assert all(c.is_nonnegative() for c in s.coeffs)
