"""Integer coordinates of ``u_k`` and ``v_k`` when ``p = sqrt(d)``.

Writing ``u_k = a_k + b_k sqrt(d)`` and ``v_k = c_k + e_k sqrt(d)`` turns the
recurrence into the coupled integer system

    a_{k+1} = d b_k + a_{k-1},   b_{k+1} = a_k + b_{k-1},

with the same shape for ``(c, e)``.  Seeds are ``(a, b) = (0, 0), (1, 0)`` and
``(c, e) = (2, 0), (0, 1)``; the second ``(c, e)`` seed is what ``v_1 = sqrt(d)``
forces (``c_1 = 1, d_1 = 0`` as sometimes printed would give ``v_1 = 1``).

Since ``p^2 + 4 = d + 4``, the u-power identity at ``r = 1`` represents powers
of ``w = d + 4``: ``sum_k C(2n, n+k) (a_k^2 + d b_k^2) = w^(n-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .exactmath import QuadElem
from .halfsum import half_sum
from .sequences import seq_u, seq_v

__all__ = [
    "DoublePair",
    "DoubleSeqParams",
    "ab_cross_sum",
    "ab_pair",
    "ab_sequence",
    "cd_pair",
    "cd_sequence",
    "rep_power_sum",
    "zero_product_check",
]


@dataclass(frozen=True)
class DoubleSeqParams:
    d: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError(f"radicand must be non-negative, got {self.d}")

    @property
    def w(self) -> int:
        return self.d + 4

    @property
    def square_root(self) -> int | None:
        s = isqrt(self.d)
        return s if s * s == self.d else None

    @classmethod
    def for_base(cls, w: int) -> DoubleSeqParams:
        if w < 4:
            raise ValueError(f"base must be at least 4, got {w}")
        return cls(w - 4)


@dataclass(frozen=True)
class DoublePair:
    """``rational + irrational*sqrt(d)`` at ``index``."""

    rational: int
    irrational: int
    index: int

    def as_quad(self, d: int) -> QuadElem:
        return QuadElem(Fraction(self.rational), Fraction(self.irrational), d)


def _coupled(first: tuple[int, int], second: tuple[int, int], k_max: int,
             params: DoubleSeqParams, integer_seq) -> list[DoublePair]:
    s = params.square_root
    if s is not None:
        # sqrt(d) is the integer s: the sequence has no irrational part
        return [DoublePair(int(integer_seq(k, s)), 0, k) for k in range(k_max + 1)]
    d = params.d
    rows = [first, second][: k_max + 1]
    while len(rows) <= k_max:
        (x0, y0), (x1, y1) = rows[-2], rows[-1]
        rows.append((d * y1 + x0, x1 + y0))
    return [DoublePair(x, y, k) for k, (x, y) in enumerate(rows)]


def ab_sequence(k_max: int, params: DoubleSeqParams) -> list[DoublePair]:
    return _coupled((0, 0), (1, 0), k_max, params, seq_u)


def cd_sequence(k_max: int, params: DoubleSeqParams) -> list[DoublePair]:
    return _coupled((2, 0), (0, 1), k_max, params, seq_v)


def ab_pair(k: int, params: DoubleSeqParams) -> DoublePair:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return ab_sequence(k, params)[k]


def cd_pair(k: int, params: DoubleSeqParams) -> DoublePair:
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return cd_sequence(k, params)[k]


def rep_power_sum(w: int, n: int) -> tuple[int, int]:
    """``(sum_k C(2n, n+k) (a_k^2 + d b_k^2), w^(n-1))`` with ``d = w - 4``."""
    params = DoubleSeqParams.for_base(w)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    pairs = ab_sequence(n, params)
    lhs = half_sum(n, (x.rational ** 2 + params.d * x.irrational ** 2 for x in pairs))
    return lhs, w ** (n - 1)


def zero_product_check(k_max: int, params: DoubleSeqParams) -> bool:
    """True iff ``a_k b_k = 0`` for ``k <= k_max`` with the parity pattern intact.

    The pattern: ``b_k = 0`` for odd ``k`` and ``a_k = 0`` for even ``k``.
    """
    if params.square_root is not None:
        raise ValueError(f"d = {params.d} is a perfect square; b_k vanishes trivially")
    for x in ab_sequence(k_max, params):
        if x.rational * x.irrational != 0:
            return False
        if x.index % 2 and x.irrational != 0:
            return False
        if x.index % 2 == 0 and x.rational != 0:
            return False
        if x.index == 1 and x.rational != 1:
            return False
    return True


def ab_cross_sum(n: int, params: DoubleSeqParams) -> int:
    """``sum_k C(2n, n+k) a_k b_k``, the irrational half of the r = 1 sum over 2."""
    return half_sum(n, (x.rational * x.irrational for x in ab_sequence(n, params)))
