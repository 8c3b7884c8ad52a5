from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from halfbinom.exactmath import (
    QuadElem,
    binom,
    format_value,
    quad_inv,
    quad_mul,
    quad_norm,
    quad_pow,
)

from oracles import pascal

Q = QuadElem


def surd(a, b, d):
    return QuadElem(Fraction(a), Fraction(b), d)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
radicands = st.sampled_from([2, 3, 5, 6, 7, 13])


@st.composite
def elements(draw, d=None):
    d = draw(radicands) if d is None else d
    return QuadElem(draw(rationals), draw(rationals), d)


@st.composite
def element_pairs(draw):
    d = draw(radicands)
    return draw(elements(d)), draw(elements(d))


class TestBinom:
    def test_examples(self):
        assert binom(4, 0) == 1
        assert binom(4, 2) == pascal(4, 2) == 6
        assert binom(4, 5) == 0
        assert binom(4, -1) == 0

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            binom(-1, 0)

    def test_matches_pascal_triangle(self):
        for n in range(60):
            for k in range(-2, n + 3):
                assert binom(n, k) == pascal(n, k)

    def test_pascal_rule_and_symmetry(self):
        for n in range(1, 80):
            for k in range(1, n):
                assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)
            for k in range(n + 1):
                assert binom(n, k) == binom(n, n - k)


class TestConstruction:
    def test_perfect_square_collapses(self):
        x = surd(1, 2, 9)
        assert (x.a, x.b, x.d) == (7, 0, 0)
        assert surd(0, 1, 0) == 0
        assert surd(Fraction(1, 2), 3, 4) == Fraction(13, 2)

    def test_rational_elements_forget_radicand(self):
        assert surd(5, 0, 3) == surd(5, 0, 7) == 5
        assert hash(surd(5, 0, 3)) == hash(5)

    def test_negative_radicand_rejected(self):
        with pytest.raises(ValueError):
            surd(1, 1, -3)

    def test_mismatched_radicands(self):
        with pytest.raises(ValueError):
            quad_mul(surd(1, 1, 2), surd(1, 1, 3))
        # a rational operand combines with anything
        assert quad_mul(surd(2, 0, 2), surd(1, 1, 3)) == surd(2, 2, 3)

    def test_format(self):
        assert format_value(surd(0, 5, 3)) == "0+5*sqrt(3)"
        assert format_value(surd(Fraction(1, 2), Fraction(-1, 2), 5)) == "1/2-1/2*sqrt(5)"
        assert format_value(Fraction(-3, 4)) == "-3/4"
        assert format_value(7) == "7"


class TestOperations:
    def test_mul_examples(self):
        assert quad_mul(surd(1, 1, 2), surd(1, -1, 2)) == -1
        assert quad_mul(surd(0, 1, 3), surd(0, 1, 3)) == 3
        # (2 + sqrt5)(3 + 2 sqrt5) = 6 + 4 sqrt5 + 3 sqrt5 + 10
        assert quad_mul(surd(2, 1, 5), surd(3, 2, 5)) == surd(16, 7, 5)

    def test_inv_examples(self):
        assert quad_inv(surd(2, 0, 7)) == Fraction(1, 2)
        assert quad_inv(surd(1, 1, 2)) == surd(-1, 1, 2)
        assert quad_inv(surd(0, 1, 3)) == surd(0, Fraction(1, 3), 3)
        for x in (surd(1, 1, 2), surd(0, 1, 3)):
            assert quad_mul(x, quad_inv(x)) == 1

    def test_inv_zero_norm(self):
        with pytest.raises(ZeroDivisionError):
            quad_inv(Q(Fraction(0)))

    def test_pow_examples(self):
        golden = surd(Fraction(1, 2), Fraction(1, 2), 5)
        assert quad_pow(golden, 0) == 1
        assert quad_pow(golden, 2) == surd(Fraction(3, 2), Fraction(1, 2), 5)
        assert quad_pow(Q(Fraction(2)), -1) == Fraction(1, 2)

    def test_pow_negative_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            quad_pow(Q(Fraction(0)), -2)

    def test_norm_examples(self):
        assert quad_norm(surd(1, 1, 2)) == -1
        assert quad_norm(Q(Fraction(3, 4))) == Fraction(9, 16)
        assert quad_norm(surd(Fraction(1, 2), Fraction(1, 2), 5)) == -1


@given(element_pairs())
@settings(max_examples=40, deadline=None)
def test_mul_matches_sympy(pair):
    x, y = pair
    d = x.d or y.d or 2
    sx = sympy.Rational(x.a) + sympy.Rational(x.b) * sympy.sqrt(d)
    sy = sympy.Rational(y.a) + sympy.Rational(y.b) * sympy.sqrt(d)
    z = x * y
    sz = sympy.Rational(z.a) + sympy.Rational(z.b) * sympy.sqrt(z.d or d)
    assert sympy.simplify(sympy.expand(sx * sy) - sz) == 0


@given(elements())
def test_inverse_is_exact(x):
    if quad_norm(x) == 0:
        return
    assert quad_mul(x, quad_inv(x)) == 1


@given(element_pairs())
def test_norm_is_multiplicative(pair):
    x, y = pair
    assert quad_norm(x * y) == quad_norm(x) * quad_norm(y)


@given(elements())
def test_conjugate_product_is_norm(x):
    assert x * x.conj() == quad_norm(x)


@given(elements(), st.integers(min_value=-6, max_value=12))
def test_pow_matches_repeated_product(x, e):
    if e < 0 and quad_norm(x) == 0:
        return
    base = x if e >= 0 else quad_inv(x)
    expected = Q(Fraction(1))
    for _ in range(abs(e)):
        expected = expected * base
    assert quad_pow(x, e) == expected


@given(st.fractions(max_denominator=9), st.fractions(max_denominator=9),
       st.integers(min_value=0, max_value=12))
def test_square_radicand_normal_form(a, b, s):
    x = QuadElem(a, b, s * s)
    assert x.b == 0 and x.d == 0 and x.a == a + b * s
