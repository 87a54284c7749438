from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from qrationals.cf import (
    calkin_wilf_children,
    cf_even,
    cf_odd,
    cf_parse,
    cf_str,
    cf_value,
    check_cf,
    convergents,
    cw_level,
    matrix_identity_check,
    r_sequence,
    rational_of_word,
    rationals_with_sum_upto,
    sb_level,
    stern_brocot_children,
    tau,
    word_of,
)
from qrationals.words import all_words, complement, hat

rationals = st.builds(Fraction, st.integers(1, 400), st.integers(1, 400))
short_words = st.text(alphabet="01", max_size=12)


@pytest.mark.parametrize(
    "x, even, odd",
    (
        (Fraction(22, 7), (3, 7), (3, 6, 1)),
        (Fraction(4, 5), (0, 1, 3, 1), (0, 1, 4)),
        (Fraction(2, 7), (0, 3, 1, 1), (0, 3, 2)),
        (Fraction(17, 5), (3, 2, 1, 1), (3, 2, 2)),
        (Fraction(84, 37), (2, 3, 1, 2, 2, 1), (2, 3, 1, 2, 3)),
        (Fraction(1), (0, 1), (1,)),
    ),
)
def test_expansions_of_both_parities(x, even, odd):
    assert cf_even(x) == even
    assert cf_odd(x) == odd


@given(rationals)
def test_expansions_evaluate_back(x):
    assert cf_value(cf_even(x)) == x
    assert cf_value(cf_odd(x)) == x
    assert len(cf_even(x)) % 2 == 0
    assert len(cf_odd(x)) % 2 == 1


def test_check_cf_rejects_malformed():
    with pytest.raises(ValueError):
        check_cf((0,))
    with pytest.raises(ValueError):
        check_cf((2, 0, 2))
    with pytest.raises(ValueError):
        check_cf(())
    with pytest.raises(ValueError):
        check_cf((-1, 2))


def test_convergents_and_r_sequence():
    p, q = convergents((2, 2, 2))
    assert p == (1, 2, 5, 12)
    assert q == (0, 1, 2, 5)
    assert r_sequence((2, 2, 2)) == (1, 1, 3, 7, 17)
    assert r_sequence((2, 2, 2, 2)) == (1, 1, 3, 7, 17, 41)
    assert r_sequence((1, 1, 1, 1, 1, 1)) == (1, 1, 2, 3, 5, 8, 13, 21)


@given(rationals)
def test_last_convergent_is_the_rational(x):
    a = cf_even(x)
    p, q = convergents(a)
    assert Fraction(p[-1], q[-1]) == x


@given(rationals)
def test_r_recurrence(x):
    a = cf_even(x)
    r = r_sequence(a)
    assert len(r) == len(a) + 2
    for i in range(2, len(r)):
        assert r[i] == a[i - 2] * r[i - 1] + r[i - 2]


@pytest.mark.parametrize(
    "x, w",
    (
        (Fraction(17, 5), "111001"),
        (Fraction(36, 121), "00011011100"),
        (Fraction(84, 37), "1100010011"),
        (Fraction(27, 10), "1101100"),
        (Fraction(1), ""),
        (Fraction(1, 2), "0"),
        (Fraction(2), "1"),
    ),
)
def test_word_codec_goldens(x, w):
    assert word_of(cf_even(x)) == w
    assert rational_of_word(w) == x


@given(short_words)
def test_word_codec_round_trip(w):
    assert word_of(cf_even(rational_of_word(w))) == w


@given(rationals)
def test_rational_codec_round_trip(x):
    assert rational_of_word(word_of(cf_even(x))) == x


@given(short_words)
def test_complement_inverts_the_rational(w):
    assert rational_of_word(complement(w)) == 1 / rational_of_word(w)


def test_word_of_needs_even_length():
    with pytest.raises(ValueError):
        word_of((3, 7, 1))


@given(rationals)
def test_tau_involution_matches_hat(x):
    a = cf_even(x)
    assert tau(tau(a)) == a
    assert word_of(tau(a)) == hat(word_of(a))


def test_tau_golden():
    assert tau((1, 1)) == (0, 2)
    assert tau((3, 2, 1, 1)) == (0, 1, 2, 4)


@given(rationals)
def test_matrix_identity(x):
    assert matrix_identity_check(cf_even(x))


def test_cf_bracket_syntax():
    assert cf_parse("[2;2,2]") == (2, 2, 2)
    assert cf_parse("[0;3,1,1]") == (0, 3, 1, 1)
    assert cf_str((2, 3, 1, 2, 2, 1)) == "[2;3,1,2,2,1]"
    with pytest.raises(ValueError):
        cf_parse("2;2,2")
    with pytest.raises(ValueError):
        cf_parse("[2,2,2]")
    with pytest.raises(ValueError):
        cf_parse("[2;a]")


@given(st.integers(0, 6))
def test_parse_round_trip_on_tree_levels(depth):
    for x in sb_level(depth):
        a = cf_even(x)
        assert cf_parse(cf_str(a)) == a


def test_tree_levels():
    assert sb_level(0) == [Fraction(1)]
    assert sb_level(1) == [Fraction(1, 2), Fraction(2)]
    assert sb_level(2) == [Fraction(1, 3), Fraction(2, 3), Fraction(3, 2), Fraction(3)]
    assert cw_level(2) == [Fraction(1, 3), Fraction(3, 2), Fraction(2, 3), Fraction(3)]


def test_tree_levels_agree_with_the_word_codec():
    for depth in range(7):
        level = set(sb_level(depth))
        assert level == set(cw_level(depth))
        assert level == {rational_of_word(w) for w in all_words(depth, depth)}


@given(rationals)
def test_children(x):
    left, right = stern_brocot_children(x)
    w = word_of(cf_even(x))
    assert rational_of_word(w + "0") == left
    assert rational_of_word(w + "1") == right
    left, right = calkin_wilf_children(x)
    assert left == x / (x + 1)
    assert right == x + 1


def test_rationals_with_sum_upto():
    xs = rationals_with_sum_upto(5)
    assert xs == [
        Fraction(1, 1),
        Fraction(1, 2),
        Fraction(2, 1),
        Fraction(1, 3),
        Fraction(3, 1),
        Fraction(1, 4),
        Fraction(2, 3),
        Fraction(3, 2),
        Fraction(4, 1),
    ]
    assert all(x.numerator + x.denominator <= 30 for x in rationals_with_sum_upto(30))
