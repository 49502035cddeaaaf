# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.

Same contracts as ``overq._pykernels``. Series kernels run in 64-bit
integers with checked arithmetic and hand the call to the pure-Python
kernel as soon as an input or intermediate value does not fit.
"""

from libc.stdlib cimport malloc, free

from overq import _pykernels

cdef extern from *:
    """
    static inline int overq_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int overq_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint overq_mul_ovf(long long a, long long b, long long *r) nogil
    bint overq_add_ovf(long long a, long long b, long long *r) nogil


class _Overflow(Exception):
    pass


cdef long long *_to_c(list xs, Py_ssize_t length) except NULL:
    cdef long long *buf = <long long *> malloc((length if length > 0 else 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(length):
            buf[i] = xs[i]
    except OverflowError:
        free(buf)
        raise _Overflow()
    return buf


cdef int _mul(long long *a, Py_ssize_t la, long long *b, Py_ssize_t lb,
              long long *out, Py_ssize_t size) nogil:
    cdef Py_ssize_t i, j, stop
    cdef long long ai, t
    for i in range(size):
        out[i] = 0
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        stop = lb if lb < size - i else size - i
        for j in range(stop):
            if b[j] == 0:
                continue
            if overq_mul_ovf(ai, b[j], &t):
                return 1
            if overq_add_ovf(out[i + j], t, &out[i + j]):
                return 1
    return 0


def mul_trunc(list a, list b, Py_ssize_t n):
    cdef Py_ssize_t la = min(len(a), n + 1)
    cdef Py_ssize_t lb = min(len(b), n + 1)
    if la <= 0 or lb <= 0 or n < 0:
        return []
    cdef Py_ssize_t size = min(n + 1, la + lb - 1)
    cdef long long *ca = NULL
    cdef long long *cb = NULL
    cdef long long *out = NULL
    cdef int failed
    try:
        ca = _to_c(a, la)
        cb = _to_c(b, lb)
    except _Overflow:
        if ca != NULL:
            free(ca)
        return _pykernels.mul_trunc(a, b, n)
    out = <long long *> malloc(size * sizeof(long long))
    if out == NULL:
        free(ca)
        free(cb)
        raise MemoryError()
    with nogil:
        failed = _mul(ca, la, cb, lb, out, size)
    try:
        if failed:
            return _pykernels.mul_trunc(a, b, n)
        return [out[i] for i in range(size)]
    finally:
        free(ca)
        free(cb)
        free(out)


cdef int _inv(long long *a, Py_ssize_t la, long long *out, Py_ssize_t n) nogil:
    cdef Py_ssize_t k, i, top
    cdef long long s, t, c0 = a[0]
    out[0] = c0
    for k in range(1, n + 1):
        s = 0
        top = k if k < la - 1 else la - 1
        for i in range(1, top + 1):
            if a[i] == 0:
                continue
            if overq_mul_ovf(a[i], out[k - i], &t):
                return 1
            if overq_add_ovf(s, t, &s):
                return 1
        if overq_mul_ovf(-s, c0, &out[k]):
            return 1
    return 0


def inv_trunc(list a, Py_ssize_t n):
    if a[0] not in (1, -1):
        raise ValueError("constant term must be a unit")
    cdef Py_ssize_t la = min(len(a), n + 1)
    cdef long long *ca = NULL
    cdef long long *out = NULL
    cdef int failed
    try:
        ca = _to_c(a, la)
    except _Overflow:
        return _pykernels.inv_trunc(a, n)
    out = <long long *> malloc((n + 1) * sizeof(long long))
    if out == NULL:
        free(ca)
        raise MemoryError()
    with nogil:
        failed = _inv(ca, la, out, n)
    try:
        if failed:
            return _pykernels.inv_trunc(a, n)
        return [out[i] for i in range(n + 1)]
    finally:
        free(ca)
        free(out)


# Counting walkers. Every counted object is visited exactly once, so the
# counts cannot exceed the number of visited nodes and 64 bits is ample.

cdef void _gap_walk(long long prev, long long w, long long nmax,
                    unsigned long long *counts) nogil:
    cdef long long v = prev + 1
    cdef long long nw
    while w + v <= nmax:
        nw = w + v
        counts[nw] += 1
        _gap_walk(v, nw, nmax, counts)
        if v - prev >= 2:
            counts[nw] += 1
            _gap_walk(v, nw, nmax, counts)
        v += 1


cdef void _cong_walk(long long lo, long long w, long long nmax,
                     unsigned long long *counts) nogil:
    cdef long long v = lo
    cdef long long r, nw
    while w + v <= nmax:
        if v % 4 == 2:
            r = 1
            while w + r * v <= nmax:
                nw = w + r * v
                counts[nw] += 2
                _cong_walk(v + 1, nw, nmax, counts)
                _cong_walk(v + 1, nw, nmax, counts)
                r += 1
        else:
            nw = w + v
            counts[nw] += 1
            _cong_walk(v + 1, nw, nmax, counts)
        v += 1


cdef void _reg4_walk(long long lo, long long w, long long nmax,
                     unsigned long long *counts) nogil:
    cdef long long v = lo
    cdef long long r, nw
    while w + v <= nmax:
        if v % 4 != 0:
            r = 1
            while w + r * v <= nmax:
                nw = w + r * v
                counts[nw] += 1
                _reg4_walk(v + 1, nw, nmax, counts)
                r += 1
        v += 1


cdef list _run_walker(int which, long long nmax):
    if nmax < 0:
        return []
    cdef unsigned long long *counts = <unsigned long long *> malloc(
        (nmax + 1) * sizeof(unsigned long long))
    if counts == NULL:
        raise MemoryError()
    cdef long long i
    for i in range(nmax + 1):
        counts[i] = 0
    counts[0] = 1
    with nogil:
        if which == 0:
            _gap_walk(0, 0, nmax, counts)
        elif which == 1:
            _cong_walk(1, 0, nmax, counts)
        else:
            _reg4_walk(1, 0, nmax, counts)
    try:
        return [counts[i] for i in range(nmax + 1)]
    finally:
        free(counts)


def gap_counts(long long nmax):
    return _run_walker(0, nmax)


def congruence_counts(long long nmax):
    return _run_walker(1, nmax)


def regular4_counts(long long nmax):
    return _run_walker(2, nmax)
