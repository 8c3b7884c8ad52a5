from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from halfbinom.exactmath import QuadElem, binom
from halfbinom.halfsum import cor1_checks, f_closed, f_direct, half_sum

from oracles import half_sum_oracle, pascal

TEST_ELEMENTS = [
    QuadElem(Fraction(2)),
    QuadElem(Fraction(1, 3)),
    QuadElem(Fraction(-5)),
    QuadElem(Fraction(1), Fraction(1), 2),
    QuadElem(Fraction(1, 2), Fraction(1, 2), 5),
    QuadElem(Fraction(-3), Fraction(-1), 3),
]


def f_oracle(n, a: Fraction) -> Fraction:
    return half_sum_oracle(n, lambda k: a ** k + a ** -k)


def test_half_sum_weights():
    assert half_sum(3, [1, 1, 1, 1]) == pascal(6, 3) + pascal(6, 4) + pascal(6, 5) + pascal(6, 6)
    assert half_sum(4, [0] * 5) == 0
    with pytest.raises(ValueError):
        half_sum(2, [1, 1])
    with pytest.raises(ValueError):
        half_sum(1, [1, 1, 1])


def test_f_direct_examples():
    for a in TEST_ELEMENTS:
        assert f_direct(0, a) == 2
    assert f_direct(1, 1) == f_oracle(1, Fraction(1)) == 6
    assert f_direct(2, 2) == f_oracle(2, Fraction(2)) == Fraction(105, 4)


def test_f_closed_examples():
    assert f_closed(1, 1) == 6
    assert f_closed(2, 2) == Fraction(81, 4) + 6 == Fraction(105, 4)
    for n in range(1, 6):
        assert f_closed(n, -1) == binom(2 * n, n)
    # (a + 1)^0 = 1 even at a = -1, so n = 0 gives 2 rather than C(0, 0)
    assert f_closed(0, -1) == f_direct(0, -1) == 2


def test_non_invertible_rejected():
    with pytest.raises(ValueError):
        f_direct(2, 0)
    with pytest.raises(ValueError):
        f_closed(2, QuadElem(Fraction(0)))


@pytest.mark.parametrize("a", TEST_ELEMENTS, ids=str)
def test_closed_form_matches_direct(a):
    for n in range(21):
        assert f_direct(n, a) == f_closed(n, a)


@given(st.fractions(min_value=-9, max_value=9, max_denominator=9).filter(bool),
       st.integers(min_value=0, max_value=15))
def test_closed_form_matches_rational_oracle(a, n):
    assert f_closed(n, a) == f_oracle(n, a)


def test_cor1_examples():
    assert sum(pascal(2, 1 + k) for k in range(2)) == 3 == 2 + 1
    assert sum((-1) ** k * pascal(4, 2 + k) for k in range(3)) == 3 == pascal(4, 2) // 2
    assert cor1_checks(1, QuadElem(Fraction(1), Fraction(1), 2))[3]


@pytest.mark.parametrize("a", TEST_ELEMENTS, ids=str)
def test_cor1_all_hold_for_positive_n(a):
    for n in range(1, 21):
        assert cor1_checks(n, a) == (True, True, True, True)


def test_cor1_at_zero():
    # the alternating sum is 1, not 1/2, and f(0, -1) = 2, not C(0, 0)
    assert cor1_checks(0, 2) == (True, False, False, True)
