"""Exact integer, rational and real-quadratic arithmetic.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`.
:class:`QuadElem` adds elements ``a + b*sqrt(d)`` of a real quadratic field.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from numbers import Rational
from typing import Union

__all__ = [
    "QuadElem",
    "RingLike",
    "as_quad",
    "binom",
    "format_value",
    "quad_conj",
    "quad_inv",
    "quad_mul",
    "quad_norm",
    "quad_pow",
]


def binom(n: int, k: int) -> int:
    """C(n, k) for n >= 0, with C(n, k) = 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binom: n must be non-negative, got {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


@dataclass(frozen=True, eq=False)
class QuadElem:
    """The number ``a + b*sqrt(d)`` with rational ``a``, ``b`` and integer ``d >= 0``.

    Construction normalizes: a perfect-square radicand is folded into ``a``,
    and any element with ``b == 0`` carries ``d == 0``.  Two elements are
    therefore equal as field elements iff their fields are equal.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self) -> None:
        a, b, d = Fraction(self.a), Fraction(self.b), self.d
        if not isinstance(d, int) or isinstance(d, bool):
            raise TypeError(f"radicand must be an int, got {d!r}")
        if d < 0:
            raise ValueError(f"negative radicand {d} is not supported")
        s = isqrt(d)
        if s * s == d:
            a, b = a + b * s, Fraction(0)
        if b == 0:
            d = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int) -> QuadElem:
        # a, b already Fractions and d already square-free-checked
        x = object.__new__(cls)
        object.__setattr__(x, "a", a)
        object.__setattr__(x, "b", b)
        object.__setattr__(x, "d", d if b else 0)
        return x

    @classmethod
    def sqrt(cls, d: int) -> QuadElem:
        return cls(Fraction(0), Fraction(1), d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return self.a

    def conj(self) -> QuadElem:
        return quad_conj(self)

    def norm(self) -> Fraction:
        return quad_norm(self)

    def inv(self) -> QuadElem:
        return quad_inv(self)

    def __add__(self, other: RingLike) -> QuadElem:
        try:
            y = as_quad(other)
        except TypeError:
            return NotImplemented
        d = _common_radicand(self, y)
        return QuadElem._raw(self.a + y.a, self.b + y.b, d)

    __radd__ = __add__

    def __neg__(self) -> QuadElem:
        return QuadElem._raw(-self.a, -self.b, self.d)

    def __sub__(self, other: RingLike) -> QuadElem:
        try:
            y = as_quad(other)
        except TypeError:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other: RingLike) -> QuadElem:
        return as_quad(other) - self

    def __mul__(self, other: RingLike) -> QuadElem:
        try:
            y = as_quad(other)
        except TypeError:
            return NotImplemented
        return quad_mul(self, y)

    __rmul__ = __mul__

    def __truediv__(self, other: RingLike) -> QuadElem:
        try:
            y = as_quad(other)
        except TypeError:
            return NotImplemented
        return quad_mul(self, quad_inv(y))

    def __rtruediv__(self, other: RingLike) -> QuadElem:
        return quad_mul(as_quad(other), quad_inv(self))

    def __pow__(self, e: int) -> QuadElem:
        return quad_pow(self, e)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QuadElem, int, Rational)):
            y = as_quad(other)  # type: ignore[arg-type]
            return self.a == y.a and self.b == y.b and self.d == y.d
        return NotImplemented

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __int__(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{q} is not an integer")
        return q.numerator

    def __repr__(self) -> str:
        return f"QuadElem({self})"

    def __str__(self) -> str:
        return format_value(self)


RingLike = Union[int, Fraction, QuadElem]

_FZERO = Fraction(0)


def as_quad(x: RingLike) -> QuadElem:
    if isinstance(x, QuadElem):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a ring element")
    if isinstance(x, int):
        return QuadElem._raw(Fraction(x), _FZERO, 0)
    if isinstance(x, Rational):
        return QuadElem(Fraction(x))
    raise TypeError(f"cannot interpret {x!r} as a quadratic element")


def _common_radicand(x: QuadElem, y: QuadElem) -> int:
    if x.b == 0:
        return y.d
    if y.b == 0 or x.d == y.d:
        return x.d
    raise ValueError(f"incompatible radicands sqrt({x.d}) and sqrt({y.d})")


def quad_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    if not x.b and not y.b:
        return QuadElem._raw(x.a * y.a, x.b, 0)
    d = _common_radicand(x, y)
    return QuadElem._raw(x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a, d)


def quad_conj(x: QuadElem) -> QuadElem:
    return QuadElem._raw(x.a, -x.b, x.d)


def quad_norm(x: QuadElem) -> Fraction:
    return x.a * x.a - x.d * x.b * x.b


def quad_inv(x: QuadElem) -> QuadElem:
    n = quad_norm(x)
    if n == 0:
        raise ZeroDivisionError(f"{x} has zero norm and no inverse")
    return QuadElem._raw(x.a / n, -x.b / n, x.d)


def quad_pow(x: QuadElem, e: int) -> QuadElem:
    """Square-and-multiply exponentiation; negative ``e`` inverts first."""
    if e < 0:
        x, e = quad_inv(x), -e
    result = QuadElem(Fraction(1))
    while e:
        if e & 1:
            result = quad_mul(result, x)
        e >>= 1
        if e:
            x = quad_mul(x, x)
    return result


def _format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_value(x: RingLike) -> str:
    """Exact string form: ``7``, ``-3/4`` or ``1/2+1/2*sqrt(5)``."""
    if isinstance(x, QuadElem):
        if x.b == 0:
            return _format_rational(x.a)
        sign = "-" if x.b < 0 else "+"
        return f"{_format_rational(x.a)}{sign}{_format_rational(abs(x.b))}*sqrt({x.d})"
    if isinstance(x, bool):
        raise TypeError("bool is not a ring element")
    return _format_rational(Fraction(x))
