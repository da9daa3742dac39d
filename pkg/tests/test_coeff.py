from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torlie.coeff import CycNum, cyc_pow, omega_pow

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=12
)


def cyc(order):
    if order == 3:
        return st.builds(lambda a, b: CycNum(3, a, b), rationals, rationals)
    return st.builds(lambda a: CycNum(order, a), rationals)


def test_additive_inverse_example():
    w = CycNum.omega(3)
    one = CycNum.one(3)
    assert (one + w) + (-one - w) == CycNum.zero(3)


def test_omega_plus_omega_squared():
    w = CycNum.omega(3)
    assert w + w * w == CycNum(3, -1)


def test_half_plus_half():
    h = CycNum(1, Fraction(1, 2))
    assert h + h == CycNum.one(1)


def test_mul_minimal_polynomial():
    w = CycNum.omega(3)
    assert w * w == CycNum(3, -1, -1)
    assert w * (w * w) == CycNum.one(3)


def test_mul_order_two():
    w = CycNum.omega(2)
    assert w * w == CycNum.one(2)


def test_pow_examples():
    w3 = CycNum.omega(3)
    assert cyc_pow(w3, -2) == w3
    assert cyc_pow(w3, 6) == CycNum.one(3)
    assert cyc_pow(CycNum.omega(2), 5) == CycNum(2, -1)


def test_zero_negative_power_rejected():
    with pytest.raises(ZeroDivisionError):
        CycNum.zero(3) ** -1


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        CycNum.one(2) + CycNum.one(3)
    with pytest.raises(ValueError):
        CycNum.one(1) * CycNum.omega(3)


def test_unsupported_order_rejected():
    with pytest.raises(ValueError):
        CycNum(4, 1)


def test_normalization_is_canonical():
    # Fraction reduction plus basis collapse leaves a unique form
    assert CycNum(3, Fraction(2, 4), Fraction(-6, 4)) == CycNum(3, Fraction(1, 2), Fraction(-3, 2))
    assert CycNum(2, 0, 5) == CycNum(2, -5)
    assert CycNum(1, 0, 5) == CycNum(1, 5)


@pytest.mark.parametrize("order", [1, 2, 3])
@settings(max_examples=350)
@given(data=st.data())
def test_field_axioms(order, data):
    a = data.draw(cyc(order))
    b = data.draw(cyc(order))
    c = data.draw(cyc(order))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    if b:
        assert b * b.inverse() == CycNum.one(order)
        assert (a / b) * b == a


@pytest.mark.parametrize("order", [1, 2, 3])
@given(k=st.integers(min_value=-30, max_value=30))
def test_omega_power_periodic(order, k):
    w = CycNum.omega(order)
    assert cyc_pow(w, k) == cyc_pow(w, k % order)
    assert omega_pow(order, k) == w ** k
