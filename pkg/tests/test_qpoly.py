from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from qrationals.cf import cf_even
from qrationals.qpoly import (
    ONE,
    Mat2,
    Poly,
    Q,
    ZERO,
    conjugation_check,
    nu_q,
    q_rational,
    q_shift_identity_check,
    theorem_pair,
    xy_pair,
    xy_recurrence_check,
)
from qrationals.words import hat

rationals = st.builds(Fraction, st.integers(1, 60), st.integers(1, 60))
words = st.text(alphabet="01", max_size=10)
polys = st.builds(
    Poly,
    st.dictionaries(st.integers(-3, 6), st.integers(-9, 9), max_size=5),
)


def test_poly_str_formats():
    p = Poly({4: 1, 3: 1, 2: 2, 1: 2, 0: 1})
    assert str(p) == "q^4+q^3+2*q^2+2*q+1"
    assert p.compact() == "q^4+q^3+2q^2+2q+1"
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(Q) == "q"
    assert str(Poly({0: -1, 1: 1})) == "q-1"
    assert str(Poly({-1: 2})) == "2*q^-1"


@given(polys, polys)
def test_poly_ring_laws(p, r):
    assert p + r == r + p
    assert p * r == r * p
    assert p - p == ZERO
    assert p * ONE == p
    assert p * ZERO == ZERO


@given(polys, polys, polys)
def test_poly_distributes(p, r, s):
    assert p * (r + s) == p * r + p * s


@given(polys, st.integers(-4, 4))
def test_shift_is_multiplication_by_a_power(p, k):
    assert p.shift(k) == p * Poly({k: 1})
    assert p.shift(k).shift(-k) == p


def test_eval_corner_cases():
    assert Poly({2: 3, 0: 1}).eval_at_one() == 4
    assert Poly({2: 3, 0: 1}).eval_at_zero() == 1
    with pytest.raises(ValueError):
        Poly({-1: 1}).eval_at_zero()


def test_mat2_power_and_transpose():
    m = Mat2(Q, ONE, ZERO, ONE)
    assert m ** 0 == Mat2.identity()
    assert m ** 3 == m * m * m
    assert m.transpose().transpose() == m


@pytest.mark.parametrize(
    "x, num, den",
    (
        (Fraction(7, 2), "q^4+q^3+2*q^2+2*q+1", "q+1"),
        (Fraction(2, 7), "q^4+q^3", "q^4+2*q^3+2*q^2+q+1"),
        (Fraction(4, 5), "q^4+q^3+q^2+q", "q^4+q^3+q^2+q+1"),
        (Fraction(1), "1", "1"),
        (Fraction(5, 3), "q^3+2*q^2+q+1", "q^2+q+1"),
    ),
)
def test_q_rational_goldens(x, num, den):
    qx = q_rational(x)
    assert str(qx.num) == num
    assert str(qx.den) == den


def test_fraction_display():
    assert q_rational(Fraction(7, 2)).fraction_str() == "(q^4+q^3+2q^2+2q+1)/(q+1)"
    assert q_rational(Fraction(1)).fraction_str() == "1/1"
    assert q_rational(Fraction(2, 7)).qinv_str() == "q^-1*(q^5+q^4)/(q^4+2*q^3+2*q^2+q+1)"


@given(rationals)
def test_specialization_at_one(x):
    qx = q_rational(x)
    assert qx.at_one() == x
    assert qx.num.eval_at_one() == x.numerator
    assert qx.den.eval_at_one() == x.denominator
    assert qx.den.eval_at_zero() == 1


@given(rationals)
def test_theorem_pair_is_the_shifted_fraction(x):
    a = cf_even(x)
    pair = theorem_pair(a)
    qx = q_rational(x)
    assert pair == (qx.num.shift(1), qx.den)


@given(rationals)
def test_shift_identity(x):
    assert q_shift_identity_check(x)


@given(words)
def test_nu_transpose_conjugation(w):
    assert conjugation_check(w)
    d = Mat2(ONE, ZERO, ZERO, Q)
    assert nu_q(w) * d == d * nu_q(hat(w)).transpose()


@given(words)
def test_xy_recurrence(w):
    assert xy_recurrence_check(w)


def test_xy_base_case():
    assert xy_pair("") == (Q, ONE)
