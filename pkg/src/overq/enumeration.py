"""Brute-force enumeration of overpartitions and restricted partitions.

These routines are the ground truth that generating-function code is
checked against, so they never use a product formula for what they count.
Exhaustive walks are guarded by a budget; see :func:`budget_limits`.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Mapping

from overq import kernels
from overq.errors import BudgetExceeded, DomainError, OutOfRange
from overq.series import QSeries, poch, qs_invert

DEFAULT_CELL_BUDGET = 64
DEFAULT_NMAX_BUDGET = 60

_OVERLINE = "̅"


@dataclass(frozen=True)
class Overpartition:
    """Weakly decreasing parts; ``overlined[i]`` flags part ``i``.

    Only the last occurrence of a value may carry the flag.
    """

    parts: tuple[int, ...] = ()
    overlined: tuple[bool, ...] = ()

    def __post_init__(self):
        if len(self.parts) != len(self.overlined):
            raise ValueError("parts and flags differ in length")
        for i, p in enumerate(self.parts):
            if p < 1:
                raise ValueError("parts must be positive")
            last = i + 1 == len(self.parts) or self.parts[i + 1] != p
            if i and self.parts[i - 1] < p:
                raise ValueError("parts must be weakly decreasing")
            if self.overlined[i] and not last:
                raise ValueError(f"only the last {p} may be overlined")

    @classmethod
    def parse(cls, text: str) -> "Overpartition":
        """Parse ``"3' + 2 + 1'"``-style text (a trailing ``'`` overlines)."""
        text = text.strip()
        if text in ("", "()", "0"):
            return cls()
        parts, flags = [], []
        for tok in text.split("+"):
            tok = tok.strip()
            flags.append(tok.endswith("'"))
            parts.append(int(tok.rstrip("'")))
        return cls(tuple(parts), tuple(flags))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def overline_count(self) -> int:
        return sum(self.overlined)

    @property
    def rank(self) -> int:
        if not self.parts:
            raise DomainError("the empty overpartition has no rank")
        return self.parts[0] - len(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "()"
        return " + ".join(
            f"{p}{_OVERLINE}" if o else str(p) for p, o in zip(self.parts, self.overlined)
        )

    def ascii(self) -> str:
        if not self.parts:
            return "()"
        return " + ".join(f"{p}'" if o else str(p) for p, o in zip(self.parts, self.overlined))


@dataclass
class CountTable:
    """Counts keyed by tuples of integer statistics named in ``key_names``."""

    key_names: tuple[str, ...]
    counts: dict[tuple[int, ...], int] = field(default_factory=dict)

    def __getitem__(self, key) -> int:
        if not isinstance(key, tuple):
            key = (key,)
        return self.counts.get(key, 0)

    def add(self, key: tuple[int, ...], amount: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + amount

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([*self.key_names, "count"])
        for key in sorted(self.counts):
            w.writerow([*key, self.counts[key]])
        return buf.getvalue()


# ---------------------------------------------------------------------------
# budget


def budget_limits(override: int | str | None = None) -> tuple[float, float]:
    """Return ``(cell_limit, nmax_limit)``.

    ``override`` (or the ``OVERQ_BUDGET`` environment variable) may be an
    integer, which replaces both guards when larger than the default, or
    ``"unlimited"``.
    """
    raw = override if override is not None else os.environ.get("OVERQ_BUDGET")
    if raw is None or raw == "":
        return DEFAULT_CELL_BUDGET, DEFAULT_NMAX_BUDGET
    if str(raw).strip().lower() in ("unlimited", "inf", "none"):
        return float("inf"), float("inf")
    value = int(raw)
    return max(DEFAULT_CELL_BUDGET, value), max(DEFAULT_NMAX_BUDGET, value)


def _check_cells(M: int, N: int, budget) -> None:
    limit = budget_limits(budget)[0]
    if M * N > limit:
        raise BudgetExceeded(f"box {M}x{N} has {M * N} cells, budget is {limit}")


def _check_nmax(nmax: int, budget) -> None:
    limit = budget_limits(budget)[1]
    if nmax > limit:
        raise BudgetExceeded(f"nmax={nmax} exceeds the brute-force budget {limit}")


# ---------------------------------------------------------------------------
# partition walkers


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        # remaining n - first must fit in max_len - 1 parts of size <= first
        if (max_len - 1) * first < n - first:
            break
        for rest in partitions(n - first, first, max_len - 1):
            yield (first,) + rest


def _flag_patterns(parts: tuple[int, ...]) -> Iterator[Overpartition]:
    # last index of each distinct value, largest value first
    lasts = [i for i in range(len(parts)) if i + 1 == len(parts) or parts[i + 1] != parts[i]]
    for mask in range(1 << len(lasts)):
        flags = [False] * len(parts)
        for bit, idx in enumerate(lasts):
            if mask >> bit & 1:
                flags[idx] = True
        yield Overpartition(parts, tuple(flags))


def overpartitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Overpartition]:
    """Every overpartition of ``n`` with the given bounds, each exactly once."""
    for p in partitions(n, max_part, max_len):
        yield from _flag_patterns(p)


def _distinct(parts: tuple[int, ...]) -> int:
    return len(set(parts))


def enum_overpartitions_box(M: int, N: int, budget: int | str | None = None) -> list[Overpartition]:
    """All overpartitions with largest part ``<= M`` and at most ``N`` parts.

    Ordered by weight, then decreasingly by part sequence, then by flag
    pattern (the largest value's flag toggles fastest).
    """
    if M < 0 or N < 0:
        raise OutOfRange("box dimensions must be non-negative")
    _check_cells(M, N, budget)
    out = []
    for n in range(M * N + 1):
        out.extend(overpartitions(n, M, N))
    return out


def box_weight_polynomial(M: int, N: int, by_overlines: bool = False, by_parts: bool = False,
                          budget: int | str | None = None):
    """Aggregate the box enumeration.

    Plain: a :class:`QSeries` ``sum q**weight``. Refined: a
    :class:`CountTable` keyed by ``(n, k)`` with ``k`` the overline count
    or the part count (``(n, overlines, parts)`` if both are requested).
    A partition with ``d`` distinct values carries ``comb(d, k)``
    overpartitions with ``k`` overlines.
    """
    if M < 0 or N < 0:
        raise OutOfRange("box dimensions must be non-negative")
    _check_cells(M, N, budget)
    coeffs = [0] * (M * N + 1)
    names = ("n",) + (("overlines",) if by_overlines else ()) + (("parts",) if by_parts else ())
    table = CountTable(names)
    for n in range(M * N + 1):
        for p in partitions(n, M, N):
            d = _distinct(p)
            coeffs[n] += 1 << d
            if not (by_overlines or by_parts):
                continue
            tail = (len(p),) if by_parts else ()
            if by_overlines:
                for k in range(d + 1):
                    table.add((n, k) + tail, comb(d, k))
            else:
                table.add((n,) + tail, 1 << d)
    if by_overlines or by_parts:
        return table
    return QSeries(coeffs, M * N)


def box_counts(M: int, N: int, budget: int | str | None = None) -> CountTable:
    """``O(M, N, n)`` keyed by ``n``."""
    poly = box_weight_polynomial(M, N, budget=budget)
    return CountTable(("n",), {(n,): c for n, c in poly.coeffs.items()})


def rank_counts(nmax: int, budget: int | str | None = None) -> CountTable:
    """Overpartition counts keyed by ``(m, n)``, ``m`` the rank; ``n >= 1``."""
    if nmax < 0:
        raise OutOfRange("nmax must be non-negative")
    _check_nmax(nmax, budget)
    table = CountTable(("m", "n"))
    for n in range(1, nmax + 1):
        for p in partitions(n):
            # flags do not change the rank
            table.add((p[0] - len(p), n), 1 << _distinct(p))
    return table


def overpartition_part_counts(nmax: int, budget: int | str | None = None) -> CountTable:
    """``pbar(n, k)``: overpartitions of ``n`` with ``k`` parts, keyed ``(n, k)``."""
    if nmax < 0:
        raise OutOfRange("nmax must be non-negative")
    _check_nmax(nmax, budget)
    table = CountTable(("n", "k"))
    for n in range(nmax + 1):
        for p in partitions(n):
            table.add((n, len(p)), 1 << _distinct(p))
    return table


def overpartition_counts(nmax: int) -> CountTable:
    """``pbar(n)`` for ``n <= nmax`` from ``(-q)_inf / (q)_inf``."""
    if nmax < 0:
        raise OutOfRange("nmax must be non-negative")
    gf = poch(float("inf"), nmax, sign=-1) * qs_invert(poch(float("inf"), nmax))
    return CountTable(("n",), {(n,): gf[n] for n in range(nmax + 1)})


def tau(n: int) -> int:
    """Number of positive divisors of ``n``."""
    if n < 1:
        raise DomainError("tau is defined for n >= 1")
    count = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            count += 1 if d * d == n else 2
        d += 1
    return count


# ---------------------------------------------------------------------------
# the three families of the Rogers-Ramanujan type theorem


def is_gap(op: Overpartition) -> bool:
    """Gap rule: ``l_i - l_{i+1} >= 1``, or ``>= 2`` when ``l_i`` is overlined."""
    parts = op.parts + (0,)
    for i, flag in enumerate(op.overlined):
        if parts[i] - parts[i + 1] < (2 if flag else 1):
            return False
    return True


def is_congruence(op: Overpartition) -> bool:
    """Every non-overlined part is 2 mod 4."""
    return all(flag or p % 4 == 2 for p, flag in zip(op.parts, op.overlined))


def is_regular4(op: Overpartition) -> bool:
    """No overlines and no part divisible by 4."""
    return not any(op.overlined) and all(p % 4 for p in op.parts)


def gap_overpartitions(n: int) -> Iterator[Overpartition]:
    """Overpartitions of ``n`` obeying the gap rule, largest part first."""

    def walk(rem: int, below: int) -> Iterator[list[tuple[int, bool]]]:
        # choose the next (smaller) parts; ``below`` bounds them strictly
        if rem == 0:
            yield []
            return
        for v in range(min(rem, below - 1), 0, -1):
            for tail in walk(rem - v, v):
                nxt = tail[0][0] if tail else 0
                yield [(v, False)] + tail
                if v - nxt >= 2:
                    yield [(v, True)] + tail

    for seq in walk(n, n + 1):
        yield Overpartition(tuple(p for p, _ in seq), tuple(f for _, f in seq))


def congruence_overpartitions(n: int) -> Iterator[Overpartition]:
    """Overpartitions of ``n`` whose non-overlined parts are 2 mod 4."""

    def walk(rem: int, below: int) -> Iterator[tuple[tuple[int, ...], tuple[bool, ...]]]:
        if rem == 0:
            yield (), ()
            return
        for v in range(min(rem, below - 1), 0, -1):
            if v % 4 != 2:
                for parts, flags in walk(rem - v, v):
                    yield (v,) + parts, (True,) + flags
                continue
            for r in range(1, rem // v + 1):
                for parts, flags in walk(rem - r * v, v):
                    plain = (False,) * r
                    yield (v,) * r + parts, plain + flags
                    yield (v,) * r + parts, plain[:-1] + (True,) + flags

    for parts, flags in walk(n, n + 1):
        yield Overpartition(parts, flags)


def regular4_partitions(n: int) -> Iterator[Overpartition]:
    """Partitions of ``n`` with no part divisible by 4 (no overlines)."""
    for p in partitions(n):
        if all(v % 4 for v in p):
            yield Overpartition(p, (False,) * len(p))


FAMILIES = {
    "gap": gap_overpartitions,
    "congruence": congruence_overpartitions,
    "regular4": regular4_partitions,
}


def gap_congruence_counts(nmax: int, budget: int | str | None = None) -> Mapping[str, CountTable]:
    """``A(n)``, ``B(n)``, ``C(n)`` for ``n <= nmax`` by exhaustive walks."""
    if nmax < 0:
        raise OutOfRange("nmax must be non-negative")
    _check_nmax(nmax, budget)
    out = {}
    for name, walker in (
        ("A", kernels.gap_counts),
        ("B", kernels.congruence_counts),
        ("C", kernels.regular4_counts),
    ):
        counts = walker(nmax)
        out[name] = CountTable(("n",), {(n,): int(c) for n, c in enumerate(counts)})
    return out
