# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.  Mirrors ``_pykernels`` call for call."""

import time

import numpy as np
cimport numpy as cnp

from libc.stdint cimport uint8_t, uint64_t, int64_t

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NAME = "cython"


def expand_odd(const uint64_t[::1] members, int p):
    cdef Py_ssize_t m = members.shape[0]
    cdef uint64_t ncodes = (<uint64_t>1) << p
    out_arr = np.empty(ncodes * m, dtype=np.uint64)
    cdef uint64_t[::1] out = out_arr
    cdef uint64_t code, high
    cdef Py_ssize_t k, l = 0
    with nogil:
        for code in range(ncodes):
            high = ((<uint64_t>(__builtin_popcountll(code) & 1)) << (2 * p)) | (code << p)
            for k in range(m):
                out[l] = high | (members[k] ^ code)
                l += 1
    return out_arr


def extend_by_one(const uint64_t[::1] members, int n):
    cdef Py_ssize_t m = members.shape[0], k
    out_arr = np.empty(2 * m, dtype=np.uint64)
    cdef uint64_t[::1] out = out_arr
    cdef uint64_t top = (<uint64_t>1) << n
    with nogil:
        for k in range(m):
            out[2 * k] = members[k]
            out[2 * k + 1] = (members[k] ^ 1) | top
    return out_arr


def bitmap_bytes(int n):
    return max(1, ((<uint64_t>1) << n) >> 3)


def mark_coverage(const uint64_t[::1] members, int n):
    bitmap_arr = np.zeros(bitmap_bytes(n), dtype=np.uint8)
    cdef uint8_t[::1] bm = bitmap_arr
    cdef Py_ssize_t m = members.shape[0], k
    cdef int i
    cdef uint64_t v, w
    with nogil:
        for k in range(m):
            v = members[k]
            bm[v >> 3] |= <uint8_t>(1 << (v & 7))
            for i in range(n):
                w = v ^ ((<uint64_t>1) << i)
                bm[w >> 3] |= <uint8_t>(1 << (w & 7))
    return bitmap_arr


def first_adjacent(const uint64_t[::1] members, int n):
    bitmap_arr = np.zeros(bitmap_bytes(n), dtype=np.uint8)
    cdef uint8_t[::1] bm = bitmap_arr
    cdef Py_ssize_t m = members.shape[0], k
    cdef int i
    cdef uint64_t v, w
    cdef Py_ssize_t hit_k = -1
    cdef int hit_i = -1
    with nogil:
        for k in range(m):
            v = members[k]
            bm[v >> 3] |= <uint8_t>(1 << (v & 7))
        for k in range(m):
            v = members[k]
            for i in range(n):
                w = v ^ ((<uint64_t>1) << i)
                if (bm[w >> 3] >> (w & 7)) & 1:
                    hit_k = k
                    hit_i = i
                    break
            if hit_k >= 0:
                break
    return (hit_k, hit_i)


# -- branch and bound, up to 128 vertices as two 64-bit words -----------------

cdef struct Search:
    int n
    int nv
    uint64_t full0, full1
    uint64_t closed0[128]
    uint64_t closed1[128]
    int best
    uint64_t best0, best1
    bint found
    int64_t nodes
    bint timeout
    double deadline


cdef inline int _popcount2(uint64_t a, uint64_t b) nogil:
    return __builtin_popcountll(a) + __builtin_popcountll(b)


cdef void _rec(Search* st, int size, uint64_t s0, uint64_t s1,
               uint64_t d0, uint64_t d1, uint64_t e0, uint64_t e1):
    cdef uint64_t u0, u1, c0, c1, low
    cdef int u, w, undominated
    st.nodes += 1
    if (st.nodes & 0xFFFF) == 1 and time.monotonic() > st.deadline:
        st.timeout = True
    if st.timeout:
        return
    if d0 == st.full0 and d1 == st.full1:
        if size < st.best:
            st.best = size
            st.best0 = s0
            st.best1 = s1
            st.found = True
        return
    u0 = st.full0 & ~d0
    u1 = st.full1 & ~d1
    undominated = _popcount2(u0, u1)
    if size + (undominated + st.n) // (st.n + 1) >= st.best:
        return
    if u0:
        u = __builtin_ctzll(u0)
    else:
        u = 64 + __builtin_ctzll(u1)
    c0 = st.closed0[u] & ~d0 & ~e0
    c1 = st.closed1[u] & ~d1 & ~e1
    if size == 0:
        c0 &= 1
        c1 = 0
    while c0:
        low = c0 & (~c0 + 1)
        w = __builtin_ctzll(c0)
        _rec(st, size + 1, s0 | low, s1, d0 | st.closed0[w], d1 | st.closed1[w], e0, e1)
        if st.timeout:
            return
        e0 |= low
        c0 ^= low
    while c1:
        low = c1 & (~c1 + 1)
        w = 64 + __builtin_ctzll(c1)
        _rec(st, size + 1, s0, s1 | low, d0 | st.closed0[w], d1 | st.closed1[w], e0, e1)
        if st.timeout:
            return
        e1 |= low
        c1 ^= low


def search(int n, int incumbent, double budget):
    if not 1 <= n <= 7:
        raise ValueError("compiled search supports 1 <= n <= 7")
    cdef Search st
    cdef int v, i, w
    st.n = n
    st.nv = 1 << n
    st.full0 = 0xFFFFFFFFFFFFFFFF if st.nv >= 64 else (((<uint64_t>1) << st.nv) - 1)
    st.full1 = 0xFFFFFFFFFFFFFFFF if st.nv == 128 else 0
    for v in range(st.nv):
        st.closed0[v] = 0
        st.closed1[v] = 0
        for i in range(-1, n):
            w = v if i < 0 else v ^ (1 << i)
            if w < 64:
                st.closed0[v] |= (<uint64_t>1) << w
            else:
                st.closed1[v] |= (<uint64_t>1) << (w - 64)
    st.best = incumbent
    st.best0 = 0
    st.best1 = 0
    st.found = False
    st.nodes = 0
    st.timeout = False
    st.deadline = time.monotonic() + budget
    _rec(&st, 0, 0, 0, 0, 0, 0, 0)
    found = None
    if st.found:
        found = [v for v in range(min(st.nv, 64)) if (st.best0 >> v) & 1]
        found += [64 + v for v in range(st.nv - 64) if (st.best1 >> v) & 1]
    return st.best, found, st.nodes, bool(st.timeout)
