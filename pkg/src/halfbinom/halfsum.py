"""The half-binomial kernel ``f(n, a) = sum_{k=0}^{n} C(2n, n+k) (a^k + a^-k)``."""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

from .exactmath import QuadElem, RingLike, as_quad, binom

__all__ = ["cor1_checks", "f_closed", "f_direct", "half_sum"]


def half_sum(n: int, values: Iterable[RingLike]) -> RingLike:
    """Weighted sum ``sum_k C(2n, n+k) * values[k]`` over ``k = 0..n``.

    This is the single oracle path for every summation side in
    :mod:`halfbinom.identities`; ``values`` must yield exactly ``n + 1`` items.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    total: RingLike = 0
    count = 0
    for k, x in enumerate(values):
        if k > n:
            raise ValueError(f"expected {n + 1} values, got more")
        total = total + binom(2 * n, n + k) * x
        count += 1
    if count != n + 1:
        raise ValueError(f"expected {n + 1} values, got {count}")
    return total


def _invertible(a: RingLike) -> QuadElem:
    a = as_quad(a)
    if a.norm() == 0:
        raise ValueError(f"f(n, a) needs an invertible a, got {a}")
    return a


def f_direct(n: int, a: RingLike) -> QuadElem:
    """Term-by-term evaluation of ``f(n, a)``."""
    a = _invertible(a)
    a_inv = a.inv()

    def terms():
        up = down = QuadElem(Fraction(1))
        for _ in range(n + 1):
            yield up + down
            up, down = up * a, down * a_inv

    return as_quad(half_sum(n, terms()))


def f_closed(n: int, a: RingLike) -> QuadElem:
    """``(a + 1)^(2n) / a^n + C(2n, n)``."""
    a = _invertible(a)
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return (a + 1) ** (2 * n) * a ** (-n) + binom(2 * n, n)


def cor1_checks(n: int, a: RingLike) -> tuple[bool, bool, bool, bool]:
    """The four specializations of the closed form of ``f``.

    (i)   sum C(2n, n+k)            == 2^(2n-1) + C(2n, n)/2
    (ii)  sum (-1)^k C(2n, n+k)     == C(2n, n)/2
    (iii) f(n, (-1)^r)              == (1 + (-1)^r) 2^(2n-1) + C(2n, n), r in {0, 1}
    (iv)  f(n, -a^2)                == (-1)^n (a - 1/a)^(2n) + C(2n, n)

    At ``n = 0`` checks (ii) and (iii, r = 1) are false: the closed form then
    picks up ``0^0 = 1`` from ``(a + 1)^(2n)`` at ``a = -1``.
    """
    central = binom(2 * n, n)
    half_pow = Fraction(2) ** (2 * n - 1)
    plain = half_sum(n, (1 for _ in range(n + 1)))
    alternating = half_sum(n, ((-1) ** k for k in range(n + 1)))
    first = plain == half_pow + Fraction(central, 2)
    second = alternating == Fraction(central, 2)
    third = all(
        f_direct(n, (-1) ** r) == (1 + (-1) ** r) * half_pow + central
        for r in (0, 1)
    )
    a = _invertible(a)
    fourth = f_direct(n, -a * a) == (-1) ** n * (a - a.inv()) ** (2 * n) + central
    return first, second, third, fourth
