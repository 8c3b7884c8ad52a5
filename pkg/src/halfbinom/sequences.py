"""Generalized Fibonacci ``u_n`` and Lucas ``v_n`` sequences.

Both satisfy ``x_{n+1} = p*x_n + x_{n-1}`` with seeds ``u_0, u_1 = 0, 1`` and
``v_0, v_1 = 2, p``.  The parameter ``p`` may be any real quadratic element,
so ``p = sqrt(3)`` gives sequences in ``Z[sqrt(3)]``.  Negative indices follow
``u_{-n} = (-1)^(n+1) u_n`` and ``v_{-n} = (-1)^n v_n``, which is what running
the recurrence backwards produces.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import QuadElem, RingLike, as_quad

__all__ = [
    "SeqPair",
    "SeqParams",
    "binet_check",
    "binet_roots",
    "identity4_check",
    "seq_pair",
    "seq_pair_fastdouble",
    "seq_u",
    "seq_v",
    "u_values",
    "v_values",
]

_ZERO = QuadElem(Fraction(0))
_TWO = QuadElem(Fraction(2))


@dataclass(frozen=True)
class SeqParams:
    """Recurrence parameter ``p`` together with the cached discriminant ``p^2 + 4``."""

    p: QuadElem
    disc: QuadElem = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = as_quad(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "disc", p * p + 4)

    @classmethod
    def of(cls, p: RingLike | SeqParams) -> SeqParams:
        if isinstance(p, SeqParams):
            return p
        return cls(as_quad(p))


FIBONACCI = SeqParams.of(1)
PELL = SeqParams.of(2)


@dataclass(frozen=True)
class SeqPair:
    u: QuadElem
    v: QuadElem
    index: int


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


def seq_u(n: int, params: SeqParams | RingLike) -> QuadElem:
    """``u_n`` by straight iteration of the recurrence."""
    params = SeqParams.of(params)
    if n < 0:
        return _sign(n + 1) * seq_u(-n, params)
    prev, cur = _ZERO, QuadElem(Fraction(1))
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, params.p * cur + prev
    return cur


def seq_v(n: int, params: SeqParams | RingLike) -> QuadElem:
    """``v_n`` by straight iteration of the recurrence."""
    params = SeqParams.of(params)
    if n < 0:
        return _sign(n) * seq_v(-n, params)
    prev, cur = _TWO, params.p
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, params.p * cur + prev
    return cur


def _iterate(first: QuadElem, second: QuadElem, count: int,
             p: QuadElem) -> list[QuadElem]:
    out = [first, second][:count]
    while len(out) < count:
        out.append(p * out[-1] + out[-2])
    return out


def u_values(n_max: int, params: SeqParams | RingLike) -> list[QuadElem]:
    """``[u_0, ..., u_{n_max}]`` by iteration."""
    params = SeqParams.of(params)
    return _iterate(_ZERO, QuadElem(Fraction(1)), n_max + 1, params.p)


def v_values(n_max: int, params: SeqParams | RingLike) -> list[QuadElem]:
    """``[v_0, ..., v_{n_max}]`` by iteration."""
    params = SeqParams.of(params)
    return _iterate(_TWO, params.p, n_max + 1, params.p)


def seq_pair_fastdouble(n: int, params: SeqParams | RingLike) -> SeqPair:
    """``(u_n, v_n)`` in O(log n) ring operations.

    Doubling uses ``u_{2m} = u_m v_m`` and ``v_{2m} = v_m^2 - 2(-1)^m``; an odd
    step uses ``2u_{m+1} = p u_m + v_m`` and ``2v_{m+1} = (p^2+4) u_m + p v_m``.
    """
    if n < 0:
        raise ValueError(f"fast doubling needs n >= 0, got {n}")
    params = SeqParams.of(params)
    p, disc = params.p, params.disc
    u, v, m = _ZERO, _TWO, 0
    for bit in bin(n)[2:]:
        u, v = u * v, v * v - 2 * _sign(m)
        m *= 2
        if bit == "1":
            u, v = (p * u + v) / 2, (disc * u + p * v) / 2
            m += 1
    return SeqPair(u, v, m)


def seq_pair(n: int, params: SeqParams | RingLike) -> SeqPair:
    """Fast ``(u_n, v_n)`` for any integer ``n``, negative included."""
    if n >= 0:
        return seq_pair_fastdouble(n, params)
    pair = seq_pair_fastdouble(-n, params)
    return SeqPair(_sign(n + 1) * pair.u, _sign(n) * pair.v, n)


def binet_roots(params: SeqParams | RingLike) -> tuple[QuadElem, QuadElem]:
    """The roots ``alpha > beta`` of ``x^2 = p x + 1`` for rational ``p``."""
    params = SeqParams.of(params)
    if not params.p.is_rational:
        raise ValueError(
            f"Binet roots for p = {params.p} would need a degree-4 extension"
        )
    disc = params.disc.to_fraction()
    # sqrt(N/D) = sqrt(N*D)/D keeps the radicand integral
    root = QuadElem(Fraction(0), Fraction(1, disc.denominator),
                    disc.numerator * disc.denominator)
    p = params.p
    return (p + root) / 2, (p - root) / 2


def binet_check(n: int, params: SeqParams | RingLike) -> bool:
    alpha, beta = binet_roots(params)
    an, bn = alpha ** n, beta ** n
    return (seq_u(n, params) == (an - bn) / (alpha - beta)
            and seq_v(n, params) == an + bn)


def identity4_check(n: int, m: int, params: SeqParams | RingLike) -> bool:
    """Check ``v_{n+m} - (-1)^m v_{n-m} = (p^2+4) u_n u_m``."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got m={m}, n={n}")
    params = SeqParams.of(params)
    lhs = seq_v(n + m, params) - _sign(m) * seq_v(n - m, params)
    return lhs == params.disc * seq_u(n, params) * seq_u(m, params)
