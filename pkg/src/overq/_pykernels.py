"""Pure-Python hot kernels.

Reference implementations of everything in ``_ckernels.pyx``. They work on
plain lists of Python ints, so coefficient size is unbounded.
"""

from __future__ import annotations


def mul_trunc(a: list[int], b: list[int], n: int) -> list[int]:
    """Coefficients ``0..n`` of the product of dense polynomials ``a`` and ``b``.

    The result has length ``min(n + 1, len(a) + len(b) - 1)`` (empty if
    either input is empty).
    """
    la = min(len(a), n + 1)
    lb = min(len(b), n + 1)
    if la == 0 or lb == 0 or n < 0:
        return []
    size = min(n + 1, la + lb - 1)
    out = [0] * size
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        stop = min(lb, size - i)
        for j in range(stop):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def inv_trunc(a: list[int], n: int) -> list[int]:
    """Coefficients ``0..n`` of ``1/a``; ``a[0]`` must be ``+1`` or ``-1``."""
    c0 = a[0]
    if c0 not in (1, -1):
        raise ValueError("constant term must be a unit")
    la = min(len(a), n + 1)
    out = [0] * (n + 1)
    out[0] = c0
    for k in range(1, n + 1):
        s = 0
        for i in range(1, min(k, la - 1) + 1):
            ai = a[i]
            if ai:
                s += ai * out[k - i]
        # c0 is its own inverse
        out[k] = -s * c0
    return out


def gap_counts(nmax: int) -> list[int]:
    """Count overpartitions of each ``n <= nmax`` obeying the overline gap rule.

    Parts are strictly decreasing; an overlined part must exceed the next
    part (or 0 after the last part) by at least 2.
    """
    if nmax < 0:
        return []
    counts = [0] * (nmax + 1)
    counts[0] = 1
    # (smallest part so far, weight); parts are added in increasing order
    stack = [(0, 0)]
    while stack:
        prev, w = stack.pop()
        v = prev + 1
        while w + v <= nmax:
            nw = w + v
            ways = 2 if v - prev >= 2 else 1
            counts[nw] += ways
            for _ in range(ways):
                stack.append((v, nw))
            v += 1
    return counts


def congruence_counts(nmax: int) -> list[int]:
    """Count overpartitions whose non-overlined parts are all 2 mod 4."""
    if nmax < 0:
        return []
    counts = [0] * (nmax + 1)
    counts[0] = 1
    # (next admissible part value, weight)
    stack = [(1, 0)]
    while stack:
        lo, w = stack.pop()
        v = lo
        while w + v <= nmax:
            if v % 4 == 2:
                r = 1
                while w + r * v <= nmax:
                    nw = w + r * v
                    # r plain copies, or r-1 plain copies and an overlined one
                    counts[nw] += 2
                    stack.append((v + 1, nw))
                    stack.append((v + 1, nw))
                    r += 1
            else:
                nw = w + v
                counts[nw] += 1
                stack.append((v + 1, nw))
            v += 1
    return counts


def regular4_counts(nmax: int) -> list[int]:
    """Count partitions of each ``n <= nmax`` with no part divisible by 4."""
    if nmax < 0:
        return []
    counts = [0] * (nmax + 1)
    counts[0] = 1
    stack = [(1, 0)]
    while stack:
        lo, w = stack.pop()
        v = lo
        while w + v <= nmax:
            if v % 4:
                r = 1
                while w + r * v <= nmax:
                    nw = w + r * v
                    counts[nw] += 1
                    stack.append((v + 1, nw))
                    r += 1
            v += 1
    return counts
