"""Closed forms, brute-force sums and grid verification for the identity catalogue.

Every summation side goes through :func:`halfbinom.halfsum.half_sum` (or a
plain binomial sum for the full-row classics) with sequence values produced
by straight iteration.  Closed forms use fast doubling.  The two paths share
no code beyond ring arithmetic.

Several printed closed forms are wrong.  Each such identity carries both a
``printed`` and a ``corrected`` right-hand side:

* ``U_POWER``: the statement's ``2^(2n-2)`` for even ``r`` should be
  ``2^(2n-1)``; both powers theorems also miss a ``0^(2n)`` term that only
  matters at ``n = 0``.
* ``DIFF_SUM``: ``(p^2+4)^n (u_{m/2}^{2n} - u_{t/2}^{2n})`` only holds when
  ``m = t = 2 (mod 4)``; the general form is ``g(m) - g(t)``.
* ``V2K``: the sum is ``(p^2+4)^n + C(2n, n)``, not ``(p^2+4)^n``.
* ``NEW32``: the Pell fourth-power formula disagrees with the direct sum for
  every ``n >= 1``; the u-power closed form at ``r = 2, p = 2`` is correct.
* ``CLASSIC_2A``: ``sum (-1)^k C(n,k) F_{n+k-m}`` equals
  ``(-1)^(n+m+1) F_m``, not ``F_{n-m}``.
* ``CLASSIC_2B``: ``sum C(2n,k) F_{2k}^2`` equals
  ``(9^n L_{4n} - 2*4^n)/5``; ``5^(n-1) L_{2n}`` is the value of
  ``sum C(2n,k) F_k^2``.
"""
from __future__ import annotations

import itertools
import json
import time
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from .exactmath import QuadElem, RingLike, as_quad, binom, format_value
from .halfsum import half_sum
from .sequences import (
    FIBONACCI,
    PELL,
    SeqParams,
    seq_pair,
    u_values,
    v_values,
)

__all__ = [
    "IdentityId",
    "IdentityReport",
    "Counterexample",
    "GridRow",
    "classical_eval",
    "congruence_check",
    "congruence_residue",
    "diff_sum_lhs",
    "diff_sum_rhs",
    "evaluate",
    "evaluate_grid",
    "identity_info",
    "lhs_u_power",
    "lhs_v_power",
    "rhs_u_power",
    "rhs_v_power",
    "v2k_closed",
    "v2k_lhs",
    "verify_grid",
]


class IdentityId(str, Enum):
    U_POWER = "u_power"
    V_POWER = "v_power"
    DIFF_SUM = "diff_sum"
    V2K = "v2k"
    CLASSIC_1A = "classic_1a"
    CLASSIC_1B = "classic_1b"
    CLASSIC_1C = "classic_1c"
    CLASSIC_2A = "classic_2a"
    CLASSIC_2B = "classic_2b"
    CLASSIC_3A = "classic_3a"
    CLASSIC_3B = "classic_3b"
    HOGGATT = "hoggatt"
    GENERALIZED = "generalized"
    NEW1 = "new1"
    NEW2 = "new2"
    NEW3 = "new3"
    NEW12 = "new12"
    NEW22 = "new22"
    NEW32 = "new32"
    F8 = "f8"
    CONG25 = "cong25"
    CONG625 = "cong625"

    @classmethod
    def parse(cls, name: str | IdentityId) -> IdentityId:
        if isinstance(name, IdentityId):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown identity {name!r}") from None


def _params(p: SeqParams | RingLike) -> SeqParams:
    return SeqParams.of(p)


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


# --- powers theorems ---------------------------------------------------------

def lhs_u_power(n: int, r: int, params: SeqParams | RingLike) -> RingLike:
    """Direct sum ``sum_k C(2n, n+k) u_k^(2r)``."""
    us = u_values(n, _params(params))
    return half_sum(n, (u ** (2 * r) for u in us))


def lhs_v_power(n: int, r: int, params: SeqParams | RingLike) -> RingLike:
    """Direct sum ``sum_k C(2n, n+k) v_k^(2r)``."""
    vs = v_values(n, _params(params))
    return half_sum(n, (v ** (2 * r) for v in vs))


def _check_nr(n: int, r: int) -> None:
    if n < 0 or r < 1:
        raise ValueError(f"need n >= 0 and r >= 1, got n={n}, r={r}")


def rhs_u_power(n: int, r: int, params: SeqParams | RingLike,
                paper_form: bool = False) -> QuadElem:
    """Closed form of ``sum_k C(2n, n+k) u_k^(2r)``.

    With ``paper_form`` the even-``r`` constant is ``2^(2n-2)`` and the
    ``n = 0`` term for odd ``r`` is dropped, reproducing the printed statement.
    """
    _check_nr(n, r)
    params = _params(params)
    disc = params.disc
    total = QuadElem(Fraction(0))
    for i in range(r):
        pair = seq_pair(r - i, params)
        x = pair.v if r % 2 == 0 else pair.u
        total += _sign(i * (n + 1)) * binom(2 * r, i) * x ** (2 * n)
    central = binom(2 * r, r)
    if r % 2 == 0:
        const = Fraction(2) ** (2 * n - (2 if paper_form else 1))
        return (central * const + total) / disc ** r
    result = disc ** (n - r) * total
    if n == 0 and not paper_form:
        result -= Fraction(central, 2) / disc ** r
    return result


def rhs_v_power(n: int, r: int, params: SeqParams | RingLike,
                paper_form: bool = False) -> QuadElem:
    """Closed form of ``sum_k C(2n, n+k) v_k^(2r)``; ``paper_form`` drops the n = 0 term."""
    _check_nr(n, r)
    params = _params(params)
    total = QuadElem(Fraction(0))
    for i in range(r):
        pair = seq_pair(r - i, params)
        x = pair.v if r % 2 == 0 else pair.u
        total += _sign(i * n) * binom(2 * r, i) * x ** (2 * n)
    central_r = binom(2 * r, r)
    head = Fraction(2) ** (2 * r - 1) * binom(2 * n, n)
    if r % 2 == 0:
        return central_r * Fraction(2) ** (2 * n - 1) + head + total
    result = head + params.disc ** n * total
    if n == 0 and not paper_form:
        result += Fraction(central_r, 2)
    return result


# --- difference sums and the v_{2k} sum --------------------------------------

def _check_even(m: int, t: int) -> None:
    if m < 0 or t < 0 or m % 2 or t % 2:
        raise ValueError(f"m and t must be even and non-negative, got m={m}, t={t}")


def diff_sum_lhs(n: int, m: int, t: int, params: SeqParams | RingLike) -> RingLike:
    """Direct sum ``sum_k C(2n, n+k) (v_{km} - v_{kt})``."""
    _check_even(m, t)
    vs = v_values(n * max(m, t), _params(params))
    return half_sum(n, (vs[k * m] - vs[k * t] for k in range(n + 1)))


def _diff_term(n: int, s: int, params: SeqParams) -> QuadElem:
    j = s // 2
    pair = seq_pair(j, params)
    if j % 2:
        return params.disc ** n * pair.u ** (2 * n)
    return pair.v ** (2 * n)


def diff_sum_rhs(n: int, m: int, t: int, params: SeqParams | RingLike,
                 paper_form: bool = False) -> QuadElem:
    """``g(m) - g(t)``, or the printed ``(p^2+4)^n (u_{m/2}^{2n} - u_{t/2}^{2n})``."""
    _check_even(m, t)
    params = _params(params)
    if paper_form:
        um = seq_pair(m // 2, params).u
        ut = seq_pair(t // 2, params).u
        return params.disc ** n * (um ** (2 * n) - ut ** (2 * n))
    return _diff_term(n, m, params) - _diff_term(n, t, params)


def v2k_lhs(n: int, params: SeqParams | RingLike) -> RingLike:
    vs = v_values(2 * n, _params(params))
    return half_sum(n, (vs[2 * k] for k in range(n + 1)))


def v2k_closed(n: int, params: SeqParams | RingLike,
               paper_form: bool = False) -> QuadElem:
    """``(p^2+4)^n + C(2n, n)``; the printed form omits the central binomial."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    value = _params(params).disc ** n
    return value if paper_form else value + binom(2 * n, n)


# --- Fibonacci-family classics ----------------------------------------------

def _fib(n: int) -> int:
    return int(seq_pair(n, FIBONACCI).u)


def _luc(n: int) -> int:
    return int(seq_pair(n, FIBONACCI).v)


def _fib_lhs(lo: int, hi: int) -> dict[int, int]:
    """Fibonacci numbers on ``lo..hi`` by integer iteration, for summation sides."""
    table = {0: 0, 1: 1}
    for k in range(-1, lo - 1, -1):
        table[k] = table[k + 2] - table[k + 1]
    for k in range(2, hi + 1):
        table[k] = table[k - 1] + table[k - 2]
    return table


def _lucas_lhs(hi: int) -> list[int]:
    return [int(x) for x in v_values(hi, FIBONACCI)]


def _row_sum(n: int, values: Iterable[RingLike]) -> RingLike:
    return sum((binom(n, k) * x for k, x in enumerate(values)), 0)


def _classic_1a(n: int):
    F = _fib_lhs(0, n)
    return _row_sum(n, (F[k] for k in range(n + 1))), _fib(2 * n)


def _classic_1b(n: int):
    F = _fib_lhs(0, n)
    return _row_sum(n, (2 ** k * F[k] for k in range(n + 1))), _fib(3 * n)


def _classic_1c(n: int):
    F = _fib_lhs(0, 4 * n)
    lhs = _row_sum(2 * n, (F[2 * k] for k in range(2 * n + 1)))
    return lhs, 5 ** n * _fib(2 * n)


def _classic_2a_lhs(n: int, m: int):
    F = _fib_lhs(n - m, 2 * n - m)
    return _row_sum(n, ((-1) ** k * F[n + k - m] for k in range(n + 1)))


def _classic_2b_lhs(n: int):
    F = _fib_lhs(0, 4 * n)
    return _row_sum(2 * n, (F[2 * k] ** 2 for k in range(2 * n + 1)))


def _classic_3a(n: int):
    L = _lucas_lhs(4 * n)
    lhs = _row_sum(2 * n, (L[2 * k] for k in range(2 * n + 1)))
    return lhs, 5 ** n * _luc(2 * n)


def _classic_3b(n: int):
    L = _lucas_lhs(2 * n)
    lhs = _row_sum(2 * n, ((-1) ** k * Fraction(2) ** (k - 1) * L[k]
                           for k in range(2 * n + 1)))
    return lhs, 5 ** n


def _hoggatt(n: int, m: int):
    F = _fib_lhs(min(0, 4 * m * n), max(0, 4 * m * n))
    lhs = _row_sum(n, (F[4 * m * k] for k in range(n + 1)))
    return lhs, _luc(2 * m) ** n * _fib(2 * m * n)


def _generalized(n: int, u: int, v: int, r: int):
    """``F_v^n F_{un+r} = sum_k (-1)^((n-k)u) C(n,k) F_{v-u}^(n-k) F_u^k F_{vk+r}``."""
    lo = min(0, r, v * n + r, v - u, u, v)
    hi = max(1, r, v * n + r, v - u, u, v)
    F = _fib_lhs(lo, hi)
    lhs = _row_sum(n, (_sign((n - k) * u) * F[v - u] ** (n - k) * F[u] ** k * F[v * k + r]
                       for k in range(n + 1)))
    return lhs, _fib(v) ** n * _fib(u * n + r)


def _half_power_sum(n: int, params: SeqParams, power: int, lucas: bool = False):
    values = v_values(n, params) if lucas else u_values(n, params)
    return half_sum(n, (x ** power for x in values))


def _new32_printed(n: int) -> Fraction:
    return Fraction(36 ** n - 2 ** (2 * n + 2) - 4 * _sign(n) + 3 * 4 ** n, 64)


def _f8_printed(n: int) -> Fraction:
    return Fraction(70 * 2 ** (2 * n - 1) + 7 ** (2 * n) - 8 * _sign(n) * 4 ** (2 * n)
                    + 28 * 3 ** (2 * n) - 56 * _sign(n), 625)


# --- congruences ------------------------------------------------------------

CONGRUENCE_MODULI = {IdentityId.CONG25: 25, IdentityId.CONG625: 625}


def congruence_residue(identity: IdentityId | str, n: int) -> int:
    """Residue of the congruence expression at ``n`` using modular powers."""
    identity = IdentityId.parse(identity)
    if n < 1:
        raise ValueError(f"congruences are stated for n >= 1, got {n}")
    s = _sign(n)
    if identity is IdentityId.CONG25:
        q = 25
        return (pow(3, 2 * n, q) - 4 * s + 3 * pow(2, 2 * n, q)) % q
    if identity is IdentityId.CONG625:
        q = 625
        return (70 * pow(2, 2 * n - 1, q) + pow(7, 2 * n, q) - 8 * s * pow(4, 2 * n, q)
                + 28 * pow(3, 2 * n, q) - 56 * s) % q
    raise ValueError(f"{identity.value} is not a congruence")


# --- catalogue ----------------------------------------------------------------

Evaluator = Callable[..., RingLike]


@dataclass(frozen=True)
class _Identity:
    id: IdentityId
    params: tuple[str, ...]
    lhs: Evaluator
    printed: Evaluator
    corrected: Evaluator | None = None
    # erratum identities named after a printed formula default to that form
    default_form: str = "printed"
    domain: Callable[..., bool] = lambda **_: True
    description: str = ""


def _n_at_least(k: int) -> Callable[..., bool]:
    return lambda n, **_: n >= k


def _fixed(fn: Callable[[int], tuple[RingLike, RingLike]], side: int) -> Evaluator:
    return lambda **kw: fn(**kw)[side]


def _build_catalogue() -> dict[IdentityId, _Identity]:
    I = IdentityId
    nr_domain = lambda n, r, **_: n >= 0 and r >= 1
    even_domain = lambda n, m, t, **_: n >= 0 and m >= 0 and t >= 0 and m % 2 == 0 and t % 2 == 0
    entries = [
        _Identity(I.U_POWER, ("n", "r", "p"),
                  lambda n, r, p: lhs_u_power(n, r, p),
                  lambda n, r, p: rhs_u_power(n, r, p, paper_form=True),
                  lambda n, r, p: rhs_u_power(n, r, p),
                  "corrected", nr_domain,
                  "sum C(2n,n+k) u_k^(2r)"),
        _Identity(I.V_POWER, ("n", "r", "p"),
                  lambda n, r, p: lhs_v_power(n, r, p),
                  lambda n, r, p: rhs_v_power(n, r, p, paper_form=True),
                  lambda n, r, p: rhs_v_power(n, r, p),
                  "corrected", nr_domain,
                  "sum C(2n,n+k) v_k^(2r)"),
        _Identity(I.DIFF_SUM, ("n", "m", "t", "p"),
                  lambda n, m, t, p: diff_sum_lhs(n, m, t, p),
                  lambda n, m, t, p: diff_sum_rhs(n, m, t, p, paper_form=True),
                  lambda n, m, t, p: diff_sum_rhs(n, m, t, p),
                  "corrected", even_domain,
                  "sum C(2n,n+k) (v_{km} - v_{kt}), m and t even"),
        _Identity(I.V2K, ("n", "p"),
                  lambda n, p: v2k_lhs(n, p),
                  lambda n, p: v2k_closed(n, p, paper_form=True),
                  lambda n, p: v2k_closed(n, p),
                  "corrected", _n_at_least(0),
                  "sum C(2n,n+k) v_{2k}"),
        _Identity(I.CLASSIC_1A, ("n",), _fixed(_classic_1a, 0), _fixed(_classic_1a, 1),
                  domain=_n_at_least(0), description="sum C(n,k) F_k = F_{2n}"),
        _Identity(I.CLASSIC_1B, ("n",), _fixed(_classic_1b, 0), _fixed(_classic_1b, 1),
                  domain=_n_at_least(0), description="sum C(n,k) 2^k F_k = F_{3n}"),
        _Identity(I.CLASSIC_1C, ("n",), _fixed(_classic_1c, 0), _fixed(_classic_1c, 1),
                  domain=_n_at_least(0), description="sum C(2n,k) F_{2k} = 5^n F_{2n}"),
        _Identity(I.CLASSIC_2A, ("n", "m"),
                  lambda n, m: _classic_2a_lhs(n, m),
                  lambda n, m: _fib(n - m),
                  lambda n, m: _sign(n + m + 1) * _fib(m),
                  "printed", lambda n, m: 0 <= n and m <= n,
                  "sum (-1)^k C(n,k) F_{n+k-m} = F_{n-m}, n >= m"),
        _Identity(I.CLASSIC_2B, ("n",),
                  lambda n: _classic_2b_lhs(n),
                  lambda n: Fraction(5) ** (n - 1) * _luc(2 * n),
                  lambda n: Fraction(9 ** n * _luc(4 * n) - 2 * 4 ** n, 5),
                  "printed", _n_at_least(0),
                  "sum C(2n,k) F_{2k}^2 = 5^(n-1) L_{2n}"),
        _Identity(I.CLASSIC_3A, ("n",), _fixed(_classic_3a, 0), _fixed(_classic_3a, 1),
                  domain=_n_at_least(0), description="sum C(2n,k) L_{2k} = 5^n L_{2n}"),
        _Identity(I.CLASSIC_3B, ("n",), _fixed(_classic_3b, 0), _fixed(_classic_3b, 1),
                  domain=_n_at_least(0),
                  description="sum (-1)^k C(2n,k) 2^(k-1) L_k = 5^n"),
        _Identity(I.HOGGATT, ("n", "m"), _fixed(_hoggatt, 0), _fixed(_hoggatt, 1),
                  domain=_n_at_least(0),
                  description="sum C(n,k) F_{4mk} = L_{2m}^n F_{2mn}"),
        _Identity(I.GENERALIZED, ("n", "u", "v", "r"),
                  _fixed(_generalized, 0), _fixed(_generalized, 1),
                  domain=lambda n, u, v, r: n >= 0 and u * v * (u - v) != 0,
                  description="F_v^n F_{un+r} = sum (-1)^((n-k)u) C(n,k) "
                              "F_{v-u}^(n-k) F_u^k F_{vk+r}, uv(u-v) != 0"),
        _Identity(I.NEW1, ("n",),
                  lambda n: _half_power_sum(n, FIBONACCI, 2),
                  lambda n: 5 ** (n - 1),
                  domain=_n_at_least(1), description="sum C(2n,n+k) F_k^2 = 5^(n-1)"),
        _Identity(I.NEW2, ("n",),
                  lambda n: _half_power_sum(n, FIBONACCI, 2, lucas=True),
                  lambda n: 5 ** n + 2 * binom(2 * n, n),
                  domain=_n_at_least(1),
                  description="sum C(2n,n+k) L_k^2 = 5^n + 2 C(2n,n)"),
        _Identity(I.NEW3, ("n",),
                  lambda n: _half_power_sum(n, PELL, 2),
                  lambda n: 8 ** (n - 1),
                  domain=_n_at_least(1), description="sum C(2n,n+k) P_k^2 = 8^(n-1)"),
        _Identity(I.NEW12, ("n",),
                  lambda n: _half_power_sum(n, FIBONACCI, 4),
                  lambda n: Fraction(9 ** n - 4 * _sign(n) + 3 * 4 ** n, 25),
                  domain=_n_at_least(1),
                  description="sum C(2n,n+k) F_k^4 = (3^(2n) - 4(-1)^n + 3*2^(2n))/25"),
        _Identity(I.NEW22, ("n",),
                  lambda n: _half_power_sum(n, FIBONACCI, 4, lucas=True),
                  lambda n: 9 ** n + 3 * 4 ** n + 8 * binom(2 * n, n) + 4 * _sign(n),
                  domain=_n_at_least(1),
                  description="sum C(2n,n+k) L_k^4 = 3^(2n) + 3*2^(2n) + 8 C(2n,n) + 4(-1)^n"),
        _Identity(I.NEW32, ("n",),
                  lambda n: _half_power_sum(n, PELL, 4),
                  _new32_printed,
                  lambda n: rhs_u_power(n, 2, PELL),
                  "printed", _n_at_least(1),
                  "sum C(2n,n+k) P_k^4 = (6^(2n) - 2^(2n+2) - 4(-1)^n + 3*2^(2n))/64"),
        _Identity(I.F8, ("n",),
                  lambda n: _half_power_sum(n, FIBONACCI, 8),
                  _f8_printed,
                  domain=_n_at_least(1),
                  description="sum C(2n,n+k) F_k^8 = (70*2^(2n-1) + 7^(2n) + 8(-1)^(n+1) 4^(2n)"
                              " + 28*3^(2n) + 56(-1)^(n+1))/625"),
        _Identity(I.CONG25, ("n",),
                  lambda n: congruence_residue(I.CONG25, n),
                  lambda n: 0,
                  domain=_n_at_least(1),
                  description="3^(2n) - 4(-1)^n + 3*2^(2n) = 0 (mod 25)"),
        _Identity(I.CONG625, ("n",),
                  lambda n: congruence_residue(I.CONG625, n),
                  lambda n: 0,
                  domain=_n_at_least(1),
                  description="70*2^(2n-1) + 7^(2n) + 8(-1)^(n+1) 4^(2n) + 28*3^(2n)"
                              " + 56(-1)^(n+1) = 0 (mod 625)"),
    ]
    return {e.id: e for e in entries}


_CATALOGUE = _build_catalogue()


@dataclass(frozen=True)
class IdentityInfo:
    id: IdentityId
    params: tuple[str, ...]
    default_form: str
    has_correction: bool
    description: str


def identity_info(identity: IdentityId | str) -> IdentityInfo:
    e = _CATALOGUE[IdentityId.parse(identity)]
    return IdentityInfo(e.id, e.params, e.default_form, e.corrected is not None,
                        e.description)


def _resolve_form(entry: _Identity, form: str | None) -> str:
    if form is None:
        return entry.default_form
    if form not in ("printed", "corrected"):
        raise ValueError(f"unknown form {form!r}")
    if form == "corrected" and entry.corrected is None:
        return "printed"
    return form


def _rhs_fn(entry: _Identity, form: str) -> Evaluator:
    return entry.corrected if form == "corrected" else entry.printed  # type: ignore[return-value]


def _normalize_args(entry: _Identity, args: Mapping[str, Any]) -> dict[str, Any]:
    missing = [k for k in entry.params if k not in args]
    extra = [k for k in args if k not in entry.params]
    if missing or extra:
        raise ValueError(
            f"{entry.id.value} takes parameters {', '.join(entry.params)}; "
            f"missing {missing}, unexpected {extra}"
        )
    out = {}
    for k in entry.params:
        out[k] = SeqParams.of(args[k]) if k == "p" else int(args[k])
    return out


def evaluate(identity: IdentityId | str, args: Mapping[str, Any],
             form: str | None = None) -> tuple[RingLike, RingLike]:
    """Both sides of ``identity`` at one parameter point.

    Raises ``ValueError`` for missing or unexpected parameters and for points
    outside the identity's stated domain.
    """
    entry = _CATALOGUE[IdentityId.parse(identity)]
    kw = _normalize_args(entry, args)
    if not entry.domain(**kw):
        raise ValueError(f"{entry.id.value}: parameters {_show(kw)} outside the stated domain")
    return entry.lhs(**kw), _rhs_fn(entry, _resolve_form(entry, form))(**kw)


def classical_eval(identity: IdentityId | str,
                   args: Sequence[int] | Mapping[str, int]) -> tuple[RingLike, RingLike]:
    """Evaluate an identity from positional (declared order) or named integer args."""
    entry = _CATALOGUE[IdentityId.parse(identity)]
    if not isinstance(args, Mapping):
        args = tuple(args)
        if len(args) != len(entry.params):
            raise ValueError(
                f"{entry.id.value} takes {len(entry.params)} arguments "
                f"({', '.join(entry.params)}), got {len(args)}"
            )
        args = dict(zip(entry.params, args))
    return evaluate(entry.id, args)


# --- grids and reports --------------------------------------------------------

def _show_param(value: Any) -> Any:
    if isinstance(value, SeqParams):
        return format_value(value.p)
    return value


def _show(kw: Mapping[str, Any]) -> dict[str, Any]:
    return {k: _show_param(v) for k, v in kw.items()}


def _values_equal(x: RingLike, y: RingLike) -> bool:
    return as_quad(x) == as_quad(y)


@dataclass(frozen=True)
class GridRow:
    params: dict[str, Any]
    lhs: RingLike
    rhs: RingLike

    @property
    def equal(self) -> bool:
        return _values_equal(self.lhs, self.rhs)


@dataclass(frozen=True)
class Counterexample:
    params: dict[str, Any]
    lhs: str
    rhs: str

    def to_dict(self) -> dict[str, Any]:
        return {"params": _show(self.params), "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class IdentityReport:
    identity: IdentityId
    grid: dict[str, Any]
    form: str
    checked: int = 0
    passed: int = 0
    skipped: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    printed_form_passes: bool | None = None
    corrected_form_passes: bool | None = None
    elapsed_ms: int = 0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "identity": self.identity.value,
            "form": self.form,
            "grid": self.grid,
            "checked": self.checked,
            "passed": self.passed,
            "skipped": self.skipped,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }
        if self.printed_form_passes is not None:
            out["printed_form_passes"] = self.printed_form_passes
            out["corrected_form_passes"] = self.corrected_form_passes
        out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, **kwargs: Any) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def _describe_range(values: Sequence[Any]) -> Any:
    shown = [_show_param(v) for v in values]
    if (len(shown) > 2 and all(isinstance(v, int) for v in shown)
            and shown == list(range(shown[0], shown[-1] + 1))):
        return f"{shown[0]}..{shown[-1]}"
    return shown


def _grid_axes(entry: _Identity, ranges: Mapping[str, Iterable[Any]]) -> list[list[Any]]:
    ranges = dict(ranges)
    if "p" in entry.params:
        ranges.setdefault("p", [1])
    extra = [k for k in ranges if k not in entry.params]
    missing = [k for k in entry.params if k not in ranges]
    if extra or missing:
        raise ValueError(
            f"{entry.id.value} grid needs ranges for {', '.join(entry.params)}; "
            f"missing {missing}, unexpected {extra}"
        )
    axes = []
    for name in entry.params:
        values = [SeqParams.of(v) if name == "p" else int(v) for v in ranges[name]]
        if not values:
            raise ValueError(f"empty range for {name}")
        axes.append(values)
    return axes


def evaluate_grid(identity: IdentityId | str, ranges: Mapping[str, Iterable[Any]],
                  form: str | None = None) -> Iterable[GridRow]:
    """Yield one row per in-domain grid point, in row-major parameter order."""
    entry = _CATALOGUE[IdentityId.parse(identity)]
    rhs = _rhs_fn(entry, _resolve_form(entry, form))
    for point in itertools.product(*_grid_axes(entry, ranges)):
        kw = dict(zip(entry.params, point))
        if entry.domain(**kw):
            yield GridRow(kw, entry.lhs(**kw), rhs(**kw))


def verify_grid(identity: IdentityId | str, ranges: Mapping[str, Iterable[Any]],
                form: str | None = None) -> IdentityReport:
    """Compare both sides exactly at every grid point.

    ``form`` picks the printed or corrected right-hand side (default depends
    on the identity).  For identities with both forms the report also says
    whether each form passes on the whole grid.
    """
    start = time.perf_counter()
    entry = _CATALOGUE[IdentityId.parse(identity)]
    form = _resolve_form(entry, form)
    axes = _grid_axes(entry, ranges)
    report = IdentityReport(
        identity=entry.id,
        grid={name: _describe_range(axis) for name, axis in zip(entry.params, axes)},
        form=form,
    )
    other_ok = True
    other = "printed" if form == "corrected" else "corrected"
    other_rhs = _rhs_fn(entry, other) if entry.corrected is not None else None
    for point in itertools.product(*axes):
        kw = dict(zip(entry.params, point))
        if not entry.domain(**kw):
            report.skipped += 1
            continue
        lhs = entry.lhs(**kw)
        rhs = _rhs_fn(entry, form)(**kw)
        report.checked += 1
        if _values_equal(lhs, rhs):
            report.passed += 1
        else:
            report.counterexamples.append(
                Counterexample(kw, format_value(lhs), format_value(rhs)))
        if other_rhs is not None and other_ok:
            other_ok = _values_equal(lhs, other_rhs(**kw))
    if other_rhs is not None:
        mine_ok = not report.counterexamples
        report.printed_form_passes = mine_ok if form == "printed" else other_ok
        report.corrected_form_passes = mine_ok if form == "corrected" else other_ok
    report.elapsed_ms = round((time.perf_counter() - start) * 1000)
    return report


def congruence_check(identity: IdentityId | str, n_max: int) -> IdentityReport:
    """Sweep a congruence over ``1 <= n <= n_max``."""
    identity = IdentityId.parse(identity)
    if identity not in CONGRUENCE_MODULI:
        raise ValueError(f"{identity.value} is not a congruence")
    if n_max < 1:
        raise ValueError(f"n_max must be at least 1, got {n_max}")
    return verify_grid(identity, {"n": range(1, n_max + 1)})
