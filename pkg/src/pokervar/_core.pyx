# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same signatures and results as ``_pycore``."""

import numpy as np
cimport numpy as cnp

from pokervar import _tables as T

cnp.import_array()

cdef int[::1] STRAIGHT_HIGH = T.STRAIGHT_HIGH
cdef int[::1] HIGH_BIT = T.HIGH_BIT
cdef int[::1] TOP2 = T.TOP2
cdef int[::1] TOP3 = T.TOP3
cdef int[::1] TOP5 = T.TOP5
cdef signed char[::1] FITS_STRAIGHT = T.FITS_STRAIGHT
cdef long long[:, ::1] BINOM = T.BINOM
cdef long long[::1] OFFSETS = T.SUBSET_OFFSETS
cdef long long[:, ::1] PERMS = np.ascontiguousarray(T.SUIT_PERMS)
cdef int ROYAL_BITS = T.ROYAL_BITS


cdef inline int _eval(long long* c, int n) nogil:
    cdef int counts[13]
    cdef int suit_masks[4]
    cdef int suit_counts[4]
    cdef int i, r, s, fm, sh, q, t, rest, p1, p2
    cdef int present = 0, m2 = 0, m3 = 0, m4 = 0, flush_value = -1
    for i in range(13):
        counts[i] = 0
    for i in range(4):
        suit_masks[i] = 0
        suit_counts[i] = 0
    for i in range(n):
        r = <int>(c[i] >> 2)
        s = <int>(c[i] & 3)
        counts[r] += 1
        suit_masks[s] |= 1 << r
        suit_counts[s] += 1
    for s in range(4):
        if suit_counts[s] >= 5:
            fm = suit_masks[s]
            sh = STRAIGHT_HIGH[fm]
            if sh >= 0:
                return 8 << 20 | sh << 16
            flush_value = 5 << 20 | TOP5[fm]
    for r in range(13):
        if counts[r]:
            present |= 1 << r
            if counts[r] == 2:
                m2 |= 1 << r
            elif counts[r] == 3:
                m3 |= 1 << r
            elif counts[r] == 4:
                m4 |= 1 << r
    if m4:
        q = HIGH_BIT[m4]
        return 7 << 20 | q << 16 | HIGH_BIT[present & ~(1 << q)] << 12
    if m3:
        t = HIGH_BIT[m3]
        rest = (m3 & ~(1 << t)) | m2
        if rest:
            return 6 << 20 | t << 16 | HIGH_BIT[rest] << 12
    if flush_value >= 0:
        return flush_value
    sh = STRAIGHT_HIGH[present]
    if sh >= 0:
        return 4 << 20 | sh << 16
    if m3:
        t = HIGH_BIT[m3]
        return 3 << 20 | t << 16 | TOP2[present & ~(1 << t)] << 8
    if m2 & (m2 - 1):
        p1 = HIGH_BIT[m2]
        p2 = HIGH_BIT[m2 & ~(1 << p1)]
        return 2 << 20 | p1 << 16 | p2 << 12 | HIGH_BIT[present & ~((1 << p1) | (1 << p2))] << 8
    if m2:
        p1 = HIGH_BIT[m2]
        return 1 << 20 | p1 << 16 | TOP3[present & ~(1 << p1)] << 4
    return TOP5[present]


def eval7(cards):
    cdef long long[:, ::1] c = np.ascontiguousarray(cards, dtype=np.int64)
    cdef Py_ssize_t n = c.shape[0], i
    cdef int k = <int>c.shape[1]
    out = np.empty(n, dtype=np.int32)
    cdef int[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _eval(&c[i, 0], k)
    return out


def showdown_codes(hero, villain, boards):
    cdef long long[:, ::1] b = np.ascontiguousarray(boards, dtype=np.int64)
    cdef long long[::1] h = np.ascontiguousarray(hero, dtype=np.int64)
    cdef long long[::1] v = np.ascontiguousarray(villain, dtype=np.int64)
    cdef Py_ssize_t n = b.shape[0], i
    cdef int k = <int>b.shape[1], j, a, w
    cdef long long buf[7]
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] o = out
    with nogil:
        for i in range(n):
            for j in range(k):
                buf[2 + j] = b[i, j]
            buf[0] = h[0]
            buf[1] = h[1]
            a = _eval(buf, k + 2)
            buf[0] = v[0]
            buf[1] = v[1]
            w = _eval(buf, k + 2)
            o[i] = 1 if a > w else (-1 if a < w else 0)
    return out


cdef inline int _category(long long* c, bint wild) nogil:
    cdef int counts[13]
    cdef int i, r, s, n_wild = 0, top = 0, n_pairs = 0, mask = 0, lead = -1, p = -1
    cdef bint suited = True, distinct, straight, royal
    for i in range(13):
        counts[i] = 0
    for i in range(5):
        r = <int>(c[i] >> 2)
        s = <int>(c[i] & 3)
        if wild and r == 0:
            n_wild += 1
            continue
        counts[r] += 1
        mask |= 1 << r
        if lead < 0:
            lead = s
        elif s != lead:
            suited = False
    for r in range(13):
        if counts[r] > top:
            top = counts[r]
        if counts[r] == 2:
            n_pairs += 1
            p = r
    distinct = top == 1
    royal = (mask & ROYAL_BITS) == mask
    if wild:
        if n_wild == 4:
            return 1
        straight = distinct and FITS_STRAIGHT[mask] == 1
        if suited and distinct and royal:
            return 0 if n_wild == 0 else 2
        if top + n_wild >= 5:
            return 3
        if suited and straight:
            return 4
        if top + n_wild >= 4:
            return 5
        if (n_wild == 0 and top == 3 and n_pairs == 1) or (n_wild == 1 and n_pairs == 2):
            return 6
        if suited:
            return 7
        if straight:
            return 8
        if top + n_wild >= 3:
            return 9
        return 12
    straight = distinct and STRAIGHT_HIGH[mask] >= 0
    if suited and straight:
        return 0 if royal else 4
    if top == 4:
        return 5
    if top == 3:
        return 6 if n_pairs == 1 else (7 if suited else (8 if straight else 9))
    if suited:
        return 7
    if straight:
        return 8
    if n_pairs == 2:
        return 10
    if n_pairs == 1 and p >= 9:
        return 11
    return 12


def category5(cards, bint wild):
    cdef long long[:, ::1] c = np.ascontiguousarray(cards, dtype=np.int64)
    cdef Py_ssize_t n = c.shape[0], i
    out = np.empty(n, dtype=np.int8)
    cdef signed char[::1] o = out
    with nogil:
        for i in range(n):
            o[i] = _category(&c[i, 0], wild)
    return out


def canonical_keys(cards, bint wild):
    cdef long long[:, ::1] c = np.ascontiguousarray(cards, dtype=np.int64)
    cdef Py_ssize_t n = c.shape[0], i
    cdef int p, j, a, b, nd
    cdef long long buf[5]
    cdef long long key, best, tmp
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] o = out
    with nogil:
        for i in range(n):
            best = -1
            for p in range(24):
                nd = 0
                for j in range(5):
                    if wild and (c[i, j] >> 2) == 0:
                        buf[j] = -1
                    else:
                        buf[j] = (c[i, j] >> 2) * 4 + PERMS[p, c[i, j] & 3]
                # insertion sort of five entries
                for a in range(1, 5):
                    tmp = buf[a]
                    b = a - 1
                    while b >= 0 and buf[b] > tmp:
                        buf[b + 1] = buf[b]
                        b -= 1
                    buf[b + 1] = tmp
                key = 0
                for j in range(5):
                    if buf[j] < 0:
                        buf[j] = nd
                        nd += 1
                    key = key * 52 + buf[j]
                if best < 0 or key < best:
                    best = key
            o[i] = best
    return out


cdef inline void _subset_idx(long long* h, long long* idx) nogil:
    cdef int m, j, k
    cdef long long v
    for m in range(32):
        k = 0
        v = 0
        for j in range(5):
            if m >> j & 1:
                k += 1
                v += BINOM[h[j], k]
        idx[m] = OFFSETS[k] + v


def subset_sums(hands, pays):
    cdef long long[:, ::1] h = np.ascontiguousarray(hands, dtype=np.int64)
    cdef long long[::1] p = np.ascontiguousarray(pays, dtype=np.int64)
    cdef Py_ssize_t n = h.shape[0], i
    cdef int m
    cdef long long idx[32]
    cdef long long pv, pv2
    t1 = np.zeros(T.N_SUBSETS, dtype=np.int64)
    t2 = np.zeros(T.N_SUBSETS, dtype=np.int64)
    cdef long long[::1] a1 = t1
    cdef long long[::1] a2 = t2
    with nogil:
        for i in range(n):
            _subset_idx(&h[i, 0], idx)
            pv = p[i]
            pv2 = pv * pv
            for m in range(32):
                a1[idx[m]] += pv
                a2[idx[m]] += pv2
    return t1, t2


def hold_sums(hands, t1, t2):
    cdef long long[:, ::1] h = np.ascontiguousarray(hands, dtype=np.int64)
    cdef long long[::1] a1 = np.ascontiguousarray(t1, dtype=np.int64)
    cdef long long[::1] a2 = np.ascontiguousarray(t2, dtype=np.int64)
    cdef Py_ssize_t n = h.shape[0], i
    cdef int m, b
    cdef long long idx[32]
    s1 = np.empty((n, 32), dtype=np.int64)
    s2 = np.empty((n, 32), dtype=np.int64)
    cdef long long[:, ::1] o1 = s1
    cdef long long[:, ::1] o2 = s2
    with nogil:
        for i in range(n):
            _subset_idx(&h[i, 0], idx)
            for m in range(32):
                o1[i, m] = a1[idx[m]]
                o2[i, m] = a2[idx[m]]
            for b in range(5):
                for m in range(32):
                    if not (m >> b & 1):
                        o1[i, m] -= o1[i, m | (1 << b)]
                        o2[i, m] -= o2[i, m | (1 << b)]
    return s1, s2
