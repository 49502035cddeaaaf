"""Truncated formal power series in ``q`` and in ``(x, q)``.

Every series carries the order up to which its coefficients are known.
Binary operations keep the smaller order, so coefficients that were never
computed cannot leak into a result::

    >>> a = QSeries([1, 2], 3)          # 1 + 2q + O(q^4)
    >>> b = QSeries({2: 1}, 2)          # q^2 + O(q^3)
    >>> (a + b).trunc
    2

All coefficients are Python ints. The inner loops go through
:mod:`overq.kernels`, which may run them in checked 64-bit arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

from overq import kernels
from overq.errors import NonUnitConstantTerm

INFINITY = math.inf

CoeffSource = Union[Mapping[int, int], Sequence[int]]


def _dense(coeffs: CoeffSource, trunc: int) -> list[int]:
    out = [0] * (trunc + 1)
    if isinstance(coeffs, Mapping):
        items: Iterable[tuple[int, int]] = coeffs.items()
    else:
        items = enumerate(coeffs)
    for e, c in items:
        e = int(e)
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        if e <= trunc:
            out[e] += int(c)
    return out


def _add_into(acc: list[int], other: Sequence[int], scale: int = 1) -> None:
    for i in range(min(len(acc), len(other))):
        if other[i]:
            acc[i] += scale * other[i]


class QSeries:
    """A power series in ``q`` known up to and including ``q**trunc``.

    ``coeffs`` is either a mapping ``exponent -> coefficient`` or a dense
    sequence. Terms above ``trunc`` are discarded.
    """

    __slots__ = ("trunc", "_c")

    def __init__(self, coeffs: CoeffSource = (), trunc: int = 0):
        if trunc < 0:
            raise ValueError("trunc must be non-negative")
        self.trunc = int(trunc)
        self._c = tuple(_dense(coeffs, self.trunc))

    @classmethod
    def _raw(cls, dense: Sequence[int], trunc: int) -> "QSeries":
        obj = cls.__new__(cls)
        obj.trunc = trunc
        c = list(dense[: trunc + 1])
        if len(c) < trunc + 1:
            c.extend([0] * (trunc + 1 - len(c)))
        obj._c = tuple(c)
        return obj

    @classmethod
    def one(cls, trunc: int) -> "QSeries":
        return cls._raw([1], trunc)

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coeff: int = 1) -> "QSeries":
        if exponent > trunc:
            return cls._raw([], trunc)
        return cls({exponent: coeff}, trunc)

    @property
    def coeffs(self) -> dict[int, int]:
        """Nonzero coefficients as ``{exponent: value}``."""
        return {e: c for e, c in enumerate(self._c) if c}

    def dense(self) -> list[int]:
        """All ``trunc + 1`` coefficients, zeros included."""
        return list(self._c)

    def __getitem__(self, e: int) -> int:
        if e < 0:
            return 0
        if e > self.trunc:
            raise IndexError(f"q^{e} lies beyond the validity order {self.trunc}")
        return self._c[e]

    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient (-1 for zero)."""
        for e in range(self.trunc, -1, -1):
            if self._c[e]:
                return e
        return -1

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, ``None`` for zero."""
        for e, c in enumerate(self._c):
            if c:
                return e
        return None

    def truncate(self, trunc: int) -> "QSeries":
        if trunc > self.trunc:
            raise ValueError("cannot raise the validity order")
        return QSeries._raw(self._c, trunc)

    def shift(self, k: int) -> "QSeries":
        """Multiply by ``q**k`` (``k >= 0``); the validity order is kept."""
        if k < 0:
            raise ValueError("shift must be non-negative")
        return QSeries._raw([0] * k + list(self._c), self.trunc)

    def __add__(self, other: "QSeries | int") -> "QSeries":
        return qs_add(self, _as_q(other, self.trunc))

    __radd__ = __add__

    def __sub__(self, other: "QSeries | int") -> "QSeries":
        return qs_sub(self, _as_q(other, self.trunc))

    def __rsub__(self, other: int) -> "QSeries":
        return qs_sub(_as_q(other, self.trunc), self)

    def __neg__(self) -> "QSeries":
        return QSeries._raw([-c for c in self._c], self.trunc)

    def __mul__(self, other: "QSeries | int") -> "QSeries":
        if isinstance(other, int):
            return QSeries._raw([other * c for c in self._c], self.trunc)
        return qs_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _as_q(other, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        t = min(self.trunc, other.trunc)
        return self._c[: t + 1] == other._c[: t + 1]

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"QSeries({format_qseries(self)})"

    def to_json(self) -> dict:
        return {
            "trunc": self.trunc,
            "coeffs": {str(e): str(c) for e, c in self.coeffs.items()},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "QSeries":
        return cls({int(e): int(c) for e, c in obj["coeffs"].items()}, int(obj["trunc"]))


def _as_q(value: "QSeries | int", trunc: int) -> QSeries:
    if isinstance(value, QSeries):
        return value
    return QSeries._raw([int(value)], trunc)


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    t = min(a.trunc, b.trunc)
    return QSeries._raw([x + y for x, y in zip(a._c[: t + 1], b._c[: t + 1])], t)


def qs_sub(a: QSeries, b: QSeries) -> QSeries:
    t = min(a.trunc, b.trunc)
    return QSeries._raw([x - y for x, y in zip(a._c[: t + 1], b._c[: t + 1])], t)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    t = min(a.trunc, b.trunc)
    return QSeries._raw(kernels.mul_trunc(list(a._c), list(b._c), t), t)


def qs_invert(a: QSeries) -> QSeries:
    """Multiplicative inverse on the validity window of ``a``."""
    if a._c[0] not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a._c[0]} is not +1 or -1")
    return QSeries._raw(kernels.inv_trunc(list(a._c), a.trunc), a.trunc)


def qs_sum(terms: Iterable[QSeries], trunc: int) -> QSeries:
    """Sum of ``terms``, each assumed valid at least to ``trunc``."""
    acc = [0] * (trunc + 1)
    for s in terms:
        if s.trunc < trunc:
            raise ValueError(f"term valid only to q^{s.trunc} < {trunc}")
        _add_into(acc, s._c)
    return QSeries._raw(acc, trunc)


@dataclass(frozen=True)
class PochSpec:
    """Shape of the product ``prod_{k=1}^{length} (1 - sign * [x] * q**k)``.

    ``sign=+1`` gives ``(q;q)_n`` (or ``(xq;q)_n``), ``sign=-1`` gives
    ``(-q;q)_n`` (or ``(-xq;q)_n``). ``length`` may be :data:`INFINITY`.
    """

    sign: int
    length: float | int
    in_x: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.length != INFINITY and (self.length < 0 or int(self.length) != self.length):
            raise ValueError("length must be a non-negative integer or INFINITY")


def _factor_count(length: float | int, trunc: int) -> int:
    # factors (1 - s q^k) with k > trunc cannot reach the window
    return trunc if length == INFINITY else min(int(length), trunc)


def qs_pochhammer(spec: PochSpec, trunc: int) -> QSeries:
    if spec.in_x:
        raise ValueError("use xs_pochhammer for products in x")
    c = [0] * (trunc + 1)
    c[0] = 1
    s = spec.sign
    for k in range(1, _factor_count(spec.length, trunc) + 1):
        for e in range(trunc, k - 1, -1):
            if c[e - k]:
                c[e] -= s * c[e - k]
    return QSeries._raw(c, trunc)


def poch(n: float | int, trunc: int, sign: int = 1) -> QSeries:
    """Shorthand for ``(q;q)_n`` (``sign=1``) or ``(-q;q)_n`` (``sign=-1``)."""
    return qs_pochhammer(PochSpec(sign, n), trunc)


def qs_product_modular(residues: Iterable[int], modulus: int, trunc: int) -> QSeries:
    """``prod (1 - q**i)`` over ``i >= 1`` with ``i mod modulus`` in ``residues``.

    A residue equal to ``modulus`` stands for ``0``; the caller inverts for
    the partition-style quotient.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    residues = list(residues)
    for r in residues:
        if not 1 <= r <= modulus:
            raise ValueError(f"residue {r} outside 1..{modulus}")
    res = {r % modulus for r in residues}
    c = [0] * (trunc + 1)
    c[0] = 1
    for k in range(1, trunc + 1):
        if k % modulus not in res:
            continue
        for e in range(trunc, k - 1, -1):
            if c[e - k]:
                c[e] -= c[e - k]
    return QSeries._raw(c, trunc)


# ---------------------------------------------------------------------------
# bivariate series


class XQSeries:
    """A power series in ``x`` and ``q`` valid for ``x**a q**b`` with
    ``a <= xtrunc`` and ``b <= qtrunc``.

    Stored sparsely by ``x``-degree: each present row is a dense tuple of
    ``q``-coefficients. ``coeffs`` may be a mapping ``(a, b) -> c``.
    """

    __slots__ = ("xtrunc", "qtrunc", "_rows")

    def __init__(self, coeffs: Mapping[tuple[int, int], int] = None, xtrunc: int = 0, qtrunc: int = 0):
        if xtrunc < 0 or qtrunc < 0:
            raise ValueError("validity orders must be non-negative")
        self.xtrunc = int(xtrunc)
        self.qtrunc = int(qtrunc)
        rows: dict[int, list[int]] = {}
        for (a, b), c in (coeffs or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in {(a, b)}")
            if a <= self.xtrunc and b <= self.qtrunc and c:
                rows.setdefault(a, [0] * (self.qtrunc + 1))[b] += int(c)
        self._rows = {a: tuple(r) for a, r in rows.items() if any(r)}

    @classmethod
    def _from_rows(cls, rows: Mapping[int, Sequence[int]], xtrunc: int, qtrunc: int) -> "XQSeries":
        obj = cls.__new__(cls)
        obj.xtrunc = xtrunc
        obj.qtrunc = qtrunc
        clean = {}
        for a, r in rows.items():
            if a > xtrunc or not any(r[: qtrunc + 1]):
                continue
            row = list(r[: qtrunc + 1])
            if len(row) < qtrunc + 1:
                row.extend([0] * (qtrunc + 1 - len(row)))
            clean[a] = tuple(row)
        obj._rows = clean
        return obj

    @classmethod
    def one(cls, xtrunc: int, qtrunc: int) -> "XQSeries":
        return cls._from_rows({0: [1]}, xtrunc, qtrunc)

    @classmethod
    def monomial(cls, a: int, b: int, xtrunc: int, qtrunc: int, coeff: int = 1) -> "XQSeries":
        return cls({(a, b): coeff}, xtrunc, qtrunc)

    @classmethod
    def from_qseries(cls, s: QSeries, xtrunc: int, power: int = 0) -> "XQSeries":
        """Embed ``x**power * s``."""
        return cls._from_rows({power: s._c}, xtrunc, s.trunc)

    @classmethod
    def from_rows(cls, rows: Mapping[int, QSeries], xtrunc: int, qtrunc: int) -> "XQSeries":
        """Build ``sum x**a * rows[a]``; each row must be valid to ``qtrunc``."""
        for a, s in rows.items():
            if s.trunc < qtrunc:
                raise ValueError(f"row {a} valid only to q^{s.trunc}")
        return cls._from_rows({a: s._c for a, s in rows.items()}, xtrunc, qtrunc)

    @property
    def coeffs(self) -> dict[tuple[int, int], int]:
        return {
            (a, b): c
            for a in sorted(self._rows)
            for b, c in enumerate(self._rows[a])
            if c
        }

    def coeff(self, a: int, b: int) -> int:
        if a > self.xtrunc or b > self.qtrunc:
            raise IndexError(f"x^{a} q^{b} lies outside the validity window")
        row = self._rows.get(a)
        return row[b] if row is not None and b >= 0 else 0

    def row(self, a: int) -> QSeries:
        """The coefficient of ``x**a`` as a series in ``q``."""
        if a > self.xtrunc:
            raise IndexError(f"x^{a} lies outside the validity window")
        return QSeries._raw(self._rows.get(a, ()), self.qtrunc)

    def truncate(self, xtrunc: int, qtrunc: int) -> "XQSeries":
        if xtrunc > self.xtrunc or qtrunc > self.qtrunc:
            raise ValueError("cannot raise validity orders")
        return XQSeries._from_rows(self._rows, xtrunc, qtrunc)

    def is_zero(self) -> bool:
        return not self._rows

    def __add__(self, other: "XQSeries") -> "XQSeries":
        return xs_add(self, other)

    def __sub__(self, other: "XQSeries") -> "XQSeries":
        return xs_sub(self, other)

    def __neg__(self) -> "XQSeries":
        return XQSeries._from_rows(
            {a: [-c for c in r] for a, r in self._rows.items()}, self.xtrunc, self.qtrunc
        )

    def __mul__(self, other: "XQSeries | QSeries | int") -> "XQSeries":
        if isinstance(other, int):
            return XQSeries._from_rows(
                {a: [other * c for c in r] for a, r in self._rows.items()},
                self.xtrunc,
                self.qtrunc,
            )
        if isinstance(other, QSeries):
            other = XQSeries.from_qseries(other, self.xtrunc)
        return xs_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XQSeries):
            return NotImplemented
        return first_difference_xq(self, other) is None

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"XQSeries({format_xqseries(self)})"

    def to_json(self) -> dict:
        return {
            "xtrunc": self.xtrunc,
            "qtrunc": self.qtrunc,
            "coeffs": {f"{a},{b}": str(c) for (a, b), c in self.coeffs.items()},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "XQSeries":
        coeffs = {}
        for key, c in obj["coeffs"].items():
            a, b = key.split(",")
            coeffs[(int(a), int(b))] = int(c)
        return cls(coeffs, int(obj["xtrunc"]), int(obj["qtrunc"]))


def first_difference_xq(a: XQSeries, b: XQSeries) -> tuple[int, int] | None:
    """Lexicographically smallest ``(x, q)`` exponent where ``a`` and ``b``
    differ inside their common window, or ``None``."""
    X = min(a.xtrunc, b.xtrunc)
    T = min(a.qtrunc, b.qtrunc)
    zero = (0,) * (T + 1)
    for i in sorted(set(a._rows) | set(b._rows)):
        if i > X:
            break
        ra = a._rows.get(i, zero)
        rb = b._rows.get(i, zero)
        for j in range(T + 1):
            if ra[j] != rb[j]:
                return (i, j)
    return None


def _combine(a: XQSeries, b: XQSeries, scale: int) -> XQSeries:
    X = min(a.xtrunc, b.xtrunc)
    T = min(a.qtrunc, b.qtrunc)
    rows: dict[int, list[int]] = {}
    for i, r in a._rows.items():
        if i <= X:
            rows[i] = list(r[: T + 1])
    for i, r in b._rows.items():
        if i <= X:
            acc = rows.setdefault(i, [0] * (T + 1))
            _add_into(acc, r, scale)
    return XQSeries._from_rows(rows, X, T)


def xs_add(a: XQSeries, b: XQSeries) -> XQSeries:
    return _combine(a, b, 1)


def xs_sub(a: XQSeries, b: XQSeries) -> XQSeries:
    return _combine(a, b, -1)


def xs_sum(terms: Iterable[XQSeries], xtrunc: int, qtrunc: int) -> XQSeries:
    rows: dict[int, list[int]] = {}
    for s in terms:
        if s.xtrunc < xtrunc or s.qtrunc < qtrunc:
            raise ValueError("term is not valid on the requested window")
        for i, r in s._rows.items():
            if i <= xtrunc:
                _add_into(rows.setdefault(i, [0] * (qtrunc + 1)), r)
    return XQSeries._from_rows(rows, xtrunc, qtrunc)


def xs_mul(a: XQSeries, b: XQSeries) -> XQSeries:
    X = min(a.xtrunc, b.xtrunc)
    T = min(a.qtrunc, b.qtrunc)
    rows: dict[int, list[int]] = {}
    for i, ra in a._rows.items():
        la = list(ra)
        for j, rb in b._rows.items():
            if i + j > X:
                continue
            prod = kernels.mul_trunc(la, list(rb), T)
            _add_into(rows.setdefault(i + j, [0] * (T + 1)), prod)
    return XQSeries._from_rows(rows, X, T)


def xs_invert(a: XQSeries) -> XQSeries:
    """Multiplicative inverse on the validity window of ``a``."""
    X, T = a.xtrunc, a.qtrunc
    r0 = a._rows.get(0)
    if r0 is None or r0[0] not in (1, -1):
        raise NonUnitConstantTerm("constant term is not +1 or -1")
    inv0 = kernels.inv_trunc(list(r0), T)
    # b_k = -inv0 * sum_{i=1..k} a_i b_{k-i}
    out: dict[int, list[int]] = {0: inv0}
    for k in range(1, X + 1):
        acc = [0] * (T + 1)
        for i in range(1, k + 1):
            ai = a._rows.get(i)
            bk = out.get(k - i)
            if ai is None or bk is None:
                continue
            _add_into(acc, kernels.mul_trunc(list(ai), bk, T))
        if any(acc):
            out[k] = [-c for c in kernels.mul_trunc(inv0, acc, T)]
    return XQSeries._from_rows(out, X, T)


def xs_pochhammer(spec: PochSpec, xtrunc: int, qtrunc: int) -> XQSeries:
    """``prod_{k=1}^{length} (1 - sign * x * q**k)`` on the given window."""
    if not spec.in_x:
        return XQSeries.from_qseries(qs_pochhammer(spec, qtrunc), xtrunc)
    T = qtrunc
    rows = [[0] * (T + 1) for _ in range(xtrunc + 1)]
    rows[0][0] = 1
    s = spec.sign
    for k in range(1, _factor_count(spec.length, T) + 1):
        # multiply by (1 - s x q^k), updating high x-degree first
        for a in range(xtrunc, 0, -1):
            src = rows[a - 1]
            dst = rows[a]
            for e in range(T, k - 1, -1):
                if src[e - k]:
                    dst[e] -= s * src[e - k]
    return XQSeries._from_rows(dict(enumerate(rows)), xtrunc, qtrunc)


def xpoch(n: float | int, xtrunc: int, qtrunc: int, sign: int = 1) -> XQSeries:
    """Shorthand for ``(xq;q)_n`` (``sign=1``) or ``(-xq;q)_n``."""
    return xs_pochhammer(PochSpec(sign, n, in_x=True), xtrunc, qtrunc)


def xs_substitute_scale(a: XQSeries, m: int) -> XQSeries:
    """Substitute ``x -> x q**m``: ``x**i q**j`` becomes ``x**i q**(j + m i)``."""
    if m < 0:
        raise ValueError("m must be non-negative")
    T = a.qtrunc
    rows = {}
    for i, r in a._rows.items():
        s = m * i
        if s > T:
            continue
        rows[i] = [0] * s + list(r[: T + 1 - s])
    return XQSeries._from_rows(rows, a.xtrunc, T)


# ---------------------------------------------------------------------------
# rendering


def _term(c: int, mono: str) -> str:
    if not mono:
        return str(abs(c))
    if abs(c) == 1:
        return mono
    return f"{abs(c)}*{mono}"


def _qmono(e: int) -> str:
    return "" if e == 0 else ("q" if e == 1 else f"q^{e}")


def _join(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for idx, (c, mono) in enumerate(terms):
        body = _term(c, mono)
        if idx == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append((" + " if c > 0 else " - ") + body)
    return "".join(out)


def format_qseries(s: QSeries, big_o: bool = False) -> str:
    """Ascending-power rendering such as ``1 + 2*q + 4*q^2``."""
    text = _join([(c, _qmono(e)) for e, c in s.coeffs.items()])
    if big_o:
        text += f" + O(q^{s.trunc + 1})"
    return text


def format_xqseries(s: XQSeries, big_o: bool = False) -> str:
    parts = []
    for a in sorted(s._rows):
        inner = format_qseries(QSeries._raw(s._rows[a], s.qtrunc))
        xm = "" if a == 0 else ("x" if a == 1 else f"x^{a}")
        if not xm:
            parts.append(f"({inner})")
        else:
            parts.append(f"{xm}*({inner})")
    text = " + ".join(parts) if parts else "0"
    if big_o:
        text += f" + O(x^{s.xtrunc + 1}, q^{s.qtrunc + 1})"
    return text
