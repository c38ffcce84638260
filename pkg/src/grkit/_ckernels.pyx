# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``."""

import numpy as np

from libc.stdint cimport uint8_t, uint64_t, int64_t

BACKEND = "cython"

cdef enum:
    MAXM = 16


def rainbow_triangle(const uint8_t[:, ::1] mat):
    cdef Py_ssize_t n = mat.shape[0]
    cdef Py_ssize_t u, v, w
    cdef Py_ssize_t fu = -1, fv = -1, fw = -1
    cdef uint8_t a, b, c
    with nogil:
        for u in range(n - 2):
            for v in range(u + 1, n - 1):
                a = mat[u, v]
                for w in range(v + 1, n):
                    b = mat[u, w]
                    c = mat[v, w]
                    if a != b and a != c and b != c:
                        fu, fv, fw = u, v, w
                        break
                if fu >= 0:
                    break
            if fu >= 0:
                break
    if fu < 0:
        return None
    return (fu, fv, fw)


def color_bitsets(const uint8_t[:, ::1] mat, int color):
    cdef Py_ssize_t n = mat.shape[0]
    cdef Py_ssize_t words = (n + 63) >> 6
    out = np.zeros((n, max(words, 1)), dtype=np.uint64)
    cdef uint64_t[:, ::1] o = out
    cdef Py_ssize_t u, v
    for u in range(n):
        for v in range(n):
            if mat[u, v] == color:
                o[u, v >> 6] |= (<uint64_t>1) << (v & 63)
    return out


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _ctz(uint64_t x) noexcept nogil:
    return __builtin_ctzll(x)


def find_embedding(const uint64_t[:, ::1] bits, Py_ssize_t n, earlier):
    cdef Py_ssize_t m = len(earlier)
    if m == 0:
        return ()
    if m > n:
        return None
    if m > MAXM:
        raise ValueError("pattern too large")
    cdef Py_ssize_t W = bits.shape[1]
    cdef int ne[MAXM]
    cdef int nb[MAXM][MAXM]
    cdef int phi[MAXM]
    cdef Py_ssize_t i, j, x
    for i in range(m):
        row = earlier[i]
        ne[i] = len(row)
        for j in range(ne[i]):
            nb[i][j] = row[j]
    cand_arr = np.zeros((m, W), dtype=np.uint64)
    used_arr = np.zeros(W, dtype=np.uint64)
    valid_arr = np.zeros(W, dtype=np.uint64)
    cdef uint64_t[:, ::1] cand = cand_arr
    cdef uint64_t[::1] used = used_arr
    cdef uint64_t[::1] valid = valid_arr
    for x in range(W):
        if (x + 1) * 64 <= n:
            valid[x] = ~(<uint64_t>0)
        elif x * 64 < n:
            valid[x] = ((<uint64_t>1) << (n - x * 64)) - 1
    cdef Py_ssize_t level = 0
    cdef Py_ssize_t wi
    cdef uint64_t word
    cdef int v
    cdef bint found = False
    with nogil:
        # candidates for level 0
        for x in range(W):
            cand[0, x] = valid[x]
        while level >= 0:
            v = -1
            for wi in range(W):
                word = cand[level, wi]
                if word:
                    v = <int>(wi * 64 + _ctz(word))
                    cand[level, wi] = word & (word - 1)
                    break
            if v < 0:
                level -= 1
                if level >= 0:
                    used[phi[level] >> 6] &= ~((<uint64_t>1) << (phi[level] & 63))
                continue
            phi[level] = v
            if level == m - 1:
                found = True
                break
            used[v >> 6] |= (<uint64_t>1) << (v & 63)
            level += 1
            for x in range(W):
                word = valid[x] & ~used[x]
                for j in range(ne[level]):
                    word &= bits[phi[nb[level][j]], x]
                cand[level, x] = word
    if not found:
        return None
    return tuple(phi[i] for i in range(m))


def module_closure(const uint8_t[:, ::1] mat, seeds):
    cdef Py_ssize_t n = mat.shape[0]
    inside_arr = np.zeros(n, dtype=bool)
    queue_arr = np.zeros(n, dtype=np.intp)
    cdef uint8_t[::1] inside = inside_arr.view(np.uint8)
    cdef Py_ssize_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0, x, y, first = -1
    for s in seeds:
        y = s
        if first < 0:
            first = y
        if not inside[y]:
            inside[y] = 1
            queue[tail] = y
            tail += 1
    with nogil:
        while head < tail:
            y = queue[head]
            head += 1
            for x in range(n):
                if not inside[x] and mat[x, y] != mat[x, first]:
                    inside[x] = 1
                    queue[tail] = x
                    tail += 1
    return inside_arr


def first_avoiding(int nbits, masks1, masks2):
    m1_arr = np.ascontiguousarray(masks1, dtype=np.int64)
    m2_arr = np.ascontiguousarray(masks2, dtype=np.int64)
    cdef const int64_t[::1] m1 = m1_arr
    cdef const int64_t[::1] m2 = m2_arr
    cdef Py_ssize_t a = m1.shape[0], b = m2.shape[0], i
    cdef int64_t total = (<int64_t>1) << nbits
    cdef int64_t x, nx, mk
    cdef bint ok
    cdef int64_t result = -1
    with nogil:
        for x in range(total):
            ok = True
            for i in range(a):
                mk = m1[i]
                if (x & mk) == mk:
                    ok = False
                    break
            if ok:
                nx = ~x
                for i in range(b):
                    mk = m2[i]
                    if (nx & mk) == mk:
                        ok = False
                        break
            if ok:
                result = x
                break
    return result
