"""Gaussian polynomials, q-trinomials and over q-binomial coefficients.

Box conventions: ``gaussian(M, N)`` and ``over_qbinomial(M, N)`` generate
(over)partitions with largest part at most ``M`` and at most ``N`` parts.
In bracket notation ``over_binom(n, j)`` is the coefficient whose top entry
is ``n`` and bottom entry ``j``, i.e. the box ``(n - j) x j``.

All polynomials are exact; they are returned as :class:`QSeries` whose
validity order is the polynomial degree bound (or a caller-chosen order).
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Sequence

from overq import kernels
from overq.errors import OutOfRange
from overq.series import QSeries, poch, qs_invert

Poly = tuple[int, ...]


class Method(str, enum.Enum):
    CLOSED_SUM = "closed"
    RECURRENCE_1 = "rec1"
    RECURRENCE_2 = "rec2"


def _padd(*polys: Sequence[int]) -> list[int]:
    out = [0] * max((len(p) for p in polys), default=0)
    for p in polys:
        for i, c in enumerate(p):
            out[i] += c
    return out


def _pshift(p: Sequence[int], k: int) -> list[int]:
    return [0] * k + list(p)


def _pmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return kernels.mul_trunc(list(a), list(b), len(a) + len(b) - 2)


def _check_box(M: int, N: int) -> None:
    if M < 0 or N < 0:
        raise OutOfRange(f"box dimensions must be non-negative, got {(M, N)}")


@lru_cache(maxsize=None)
def _gauss(M: int, N: int) -> Poly:
    if M == 0 or N == 0:
        return (1,)
    # G(M, N) = G(M-1, N) + q^M G(M, N-1)
    return tuple(_padd(_gauss(M - 1, N), _pshift(_gauss(M, N - 1), M)))


def gaussian(M: int, N: int) -> QSeries:
    """Gaussian polynomial ``(q)_{M+N} / ((q)_M (q)_N)``."""
    _check_box(M, N)
    return QSeries(_gauss(M, N), M * N)


def _trinomial(a: int, b: int, c: int) -> Poly:
    return tuple(_pmul(_gauss(a, b), _gauss(a + b, c)))


def qtrinomial(a: int, b: int, c: int) -> QSeries:
    """``(q)_{a+b+c} / ((q)_a (q)_b (q)_c)`` as an exact polynomial."""
    if min(a, b, c) < 0:
        raise OutOfRange("q-trinomial arguments must be non-negative")
    return QSeries(_trinomial(a, b, c), a * b + (a + b) * c)


def _over_term(M: int, N: int, k: int) -> Poly:
    return tuple(_pshift(_trinomial(k, M - k, N - k), k * (k + 1) // 2))


def over_term(M: int, N: int, k: int) -> QSeries:
    """Generating polynomial of box overpartitions with exactly ``k`` overlined parts."""
    _check_box(M, N)
    if not 0 <= k <= min(M, N):
        raise OutOfRange(f"k={k} outside 0..{min(M, N)}")
    return QSeries(_over_term(M, N, k), M * N)


@lru_cache(maxsize=None)
def _over_closed(M: int, N: int) -> Poly:
    return tuple(_padd(*(_over_term(M, N, k) for k in range(min(M, N) + 1))))


@lru_cache(maxsize=None)
def _over_rec1(M: int, N: int) -> Poly:
    if M == 0 or N == 0:
        return (1,)
    tail = _padd(_over_rec1(M - 1, N), _over_rec1(M - 1, N - 1))
    return tuple(_padd(_over_rec1(M, N - 1), _pshift(tail, N)))


@lru_cache(maxsize=None)
def _over_rec2(M: int, N: int) -> Poly:
    if M == 0 or N == 0:
        return (1,)
    tail = _padd(_over_rec2(M, N - 1), _over_rec2(M - 1, N - 1))
    return tuple(_padd(_over_rec2(M - 1, N), _pshift(tail, M)))


_METHODS = {
    Method.CLOSED_SUM: _over_closed,
    Method.RECURRENCE_1: _over_rec1,
    Method.RECURRENCE_2: _over_rec2,
}


def over_poly(M: int, N: int, method: Method | str = Method.CLOSED_SUM) -> Poly:
    """Raw coefficient tuple of the over q-binomial coefficient of the ``M x N`` box."""
    _check_box(M, N)
    return _METHODS[Method(method)](M, N)


def over_qbinomial(M: int, N: int, method: Method | str = Method.CLOSED_SUM) -> QSeries:
    """Generating polynomial of overpartitions fitting in the ``M x N`` box.

    >>> over_qbinomial(1, 1)
    QSeries(1 + 2*q)
    """
    return QSeries(over_poly(M, N, method), M * N)


def over_binom(n: int, j: int, trunc: int | None = None,
               method: Method | str = Method.CLOSED_SUM) -> QSeries:
    """Bracket-notation coefficient with top ``n`` and bottom ``j``.

    Zero unless ``0 <= j <= n``. With ``trunc`` the exact polynomial is
    returned at that validity order.
    """
    if j < 0 or j > n:
        return QSeries((), 0 if trunc is None else trunc)
    poly = over_poly(n - j, j, method)
    return QSeries(poly, (n - j) * j if trunc is None else trunc)


def over_limit(j: int, trunc: int) -> QSeries:
    """``(-q)_j / (q)_j`` to ``q**trunc``: overpartitions into parts at most ``j``."""
    if j < 0:
        raise OutOfRange("j must be non-negative")
    return poch(j, trunc, sign=-1) * qs_invert(poch(j, trunc))


def clear_caches() -> None:
    for fn in (_gauss, _over_closed, _over_rec1, _over_rec2):
        fn.cache_clear()
