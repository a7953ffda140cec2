# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for phi and minimal expansions on 64-bit words.

Mirrors ``_kernels_py`` exactly.  Callers guarantee |re|, |im| < 2**62, so
|re| + |im| and every w(m+1) fit an unsigned 64-bit word.
"""

import numpy as np

ctypedef unsigned long long u64
ctypedef long long i64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil

NAME = "compiled"

cdef const char* _DIGIT_CHARS = b"1inm"


cdef inline int _snowflake_index(u64 x) noexcept nogil:
    cdef u64 x2 = x + 2
    cdef int p = 63 - __builtin_clzll(x2)
    cdef u64 top
    if p == 1:
        return 0
    top = (<u64>1) << p
    if x2 == top:
        return 2 * p - 3
    if x2 <= top + (top >> 1):
        return 2 * p - 2
    return 2 * p - 1


cdef inline int _phi(i64 re, i64 im) noexcept nogil:
    cdef u64 a = <u64>(re if re >= 0 else -re)
    cdef u64 b = <u64>(im if im >= 0 else -im)
    cdef u64 t, x, w_next
    cdef int j, m, n, k
    if a < b:
        t = a
        a = b
        b = t
    if a == 0:
        return -1
    j = __builtin_ctzll(a | b)
    x = a >> j
    m = _snowflake_index(x)
    n = m + 1
    k = n >> 1
    if n & 1:
        w_next = (<u64>4) << k
    else:
        w_next = (<u64>3) << k
    if x + (b >> j) + 3 <= w_next:
        return m + 2 * j
    return m + 2 * j + 1


def snowflake_index(u64 x):
    return _snowflake_index(x)


def phi_ab(i64 re, i64 im):
    return _phi(re, im)


def phi_batch(re, im):
    cdef i64[::1] rv = np.ascontiguousarray(re, dtype=np.int64)
    cdef i64[::1] iv = np.ascontiguousarray(im, dtype=np.int64)
    cdef Py_ssize_t n = rv.shape[0], idx
    if iv.shape[0] != n:
        raise ValueError("re and im must have the same length")
    out = np.empty(n, dtype=np.int64)
    cdef i64[::1] ov = out
    with nogil:
        for idx in range(n):
            ov[idx] = _phi(rv[idx], iv[idx])
    return out


cdef inline int _leading(i64 re, i64 im, int n, i64* sr, i64* si) noexcept nogil:
    cdef int k = n >> 1
    cdef i64 s = (<i64>1) << k
    cdef int e
    cdef i64 ar = re if re >= 0 else -re
    cdef i64 ai = im if im >= 0 else -im
    if n & 1:
        if re >= 0 and im >= 0:
            e = 0
            sr[0] = s
            si[0] = s
        elif re <= 0 and im <= 0:
            e = 2
            sr[0] = -s
            si[0] = -s
        elif re >= 0:
            e = 3
            sr[0] = s
            si[0] = -s
        else:
            e = 1
            sr[0] = -s
            si[0] = s
    else:
        if ai <= re:
            e = 0
            sr[0] = s
            si[0] = 0
        elif ai <= -re:
            e = 2
            sr[0] = -s
            si[0] = 0
        elif ar <= -im:
            e = 3
            sr[0] = 0
            si[0] = -s
        else:
            e = 1
            sr[0] = 0
            si[0] = s
    return (e - k) & 3


def leading_term_ab(i64 re, i64 im, int n):
    cdef i64 sr, si
    cdef int d = _leading(re, im, n, &sr, &si)
    return sr, si, chr(_DIGIT_CHARS[d])


def expand_text(i64 re, i64 im):
    cdef int n = _phi(re, im)
    cdef int level, nxt, d
    cdef i64 sr, si
    if n < 0:
        return "0"
    buf = bytearray(b"0" * (n + 1))
    cdef unsigned char[::1] bv = buf
    level = n
    while True:
        d = _leading(re, im, level, &sr, &si)
        bv[n - level] = _DIGIT_CHARS[d]
        re -= sr
        im -= si
        if re == 0 and im == 0:
            return buf.decode("ascii")
        nxt = _phi(re, im)
        if nxt >= level:
            raise AssertionError(f"phi did not descend below {level} (got {nxt})")
        level = nxt
