# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in ``_pykernels``.

Same signatures and results.  Integer elimination first tries a machine
word path with overflow checks and falls back to Python ints when an
entry does not fit; masks are handled as 64-bit words.
"""
import heapq

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

FIELD_BITS = 8

cdef extern from *:
    """
    static inline int lc_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int lc_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int lc_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    """
    int lc_mul_ovf(long long a, long long b, long long *r) nogil
    int lc_sub_ovf(long long a, long long b, long long *r) nogil
    int lc_popcount(unsigned long long x) nogil

cdef long long _LIM = 1LL << 62


cdef int64_t* _to_c(list rows, Py_ssize_t nrows, Py_ssize_t ncols):
    # NULL when some entry is too large for the word path
    cdef int64_t* m = <int64_t*> malloc(max(nrows * ncols, 1) * sizeof(int64_t))
    cdef Py_ssize_t i, j
    cdef object v
    if m == NULL:
        raise MemoryError()
    for i in range(nrows):
        row = rows[i]
        for j in range(ncols):
            v = row[j]
            if not (-_LIM < v < _LIM):
                free(m)
                return NULL
            m[i * ncols + j] = v
    return m


cdef int _rank_c(int64_t* m, Py_ssize_t nrows, Py_ssize_t ncols, Py_ssize_t* out) nogil:
    # 0 on success, 1 on overflow
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef long long prev = 1, piv, f, a, b, t
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p * ncols + c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            for j in range(ncols):
                t = m[p * ncols + j]
                m[p * ncols + j] = m[r * ncols + j]
                m[r * ncols + j] = t
        piv = m[r * ncols + c]
        for i in range(r + 1, nrows):
            f = m[i * ncols + c]
            for j in range(c + 1, ncols):
                if lc_mul_ovf(piv, m[i * ncols + j], &a):
                    return 1
                if lc_mul_ovf(f, m[r * ncols + j], &b):
                    return 1
                if lc_sub_ovf(a, b, &t):
                    return 1
                m[i * ncols + j] = t // prev
            m[i * ncols + c] = 0
        prev = piv
        r += 1
    out[0] = r
    return 0


def _int_rank_obj(rows, Py_ssize_t ncols):
    cdef list m = [list(row_) for row_ in rows]
    cdef Py_ssize_t nrows = len(m), r = 0, c, p, i, j
    cdef list prow, row
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        prow = m[r]
        piv = prow[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def int_rank(rows, ncols):
    """Rank of an integer matrix by fraction-free (Bareiss) forward elimination."""
    cdef list rl = rows if type(rows) is list else list(rows)
    cdef Py_ssize_t nrows = len(rl), nc = ncols, r = 0
    cdef int64_t* m
    cdef int ovf
    if nrows == 0 or nc == 0:
        return 0
    m = _to_c(rl, nrows, nc)
    if m != NULL:
        with nogil:
            ovf = _rank_c(m, nrows, nc, &r)
        free(m)
        if not ovf:
            return r
    return _int_rank_obj(rl, nc)


def int_rref(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(rank, pivots, m)`` with ``m = d * rref(rows)``.
    """
    cdef list m = [list(row_) for row_ in rows]
    cdef Py_ssize_t nrows = len(m), nc = ncols, r = 0, c, p, i, j
    cdef list prow, row, pivots = []
    prev = 1
    for c in range(nc):
        if r == nrows:
            break
        p = r
        while p < nrows and m[p][c] == 0:
            p += 1
        if p == nrows:
            continue
        if p != r:
            m[p], m[r] = m[r], m[p]
        prow = m[r]
        piv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    for j in range(nc):
                        if row[j]:
                            row[j] = (piv * row[j]) // prev
                continue
            for j in range(nc):
                row[j] = (piv * row[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, m


cdef inline int _sign64(uint64_t a, uint64_t b) nogil:
    cdef uint64_t low
    cdef int inv = 0
    if a & b:
        return 0
    while b:
        low = b & (~b + 1)
        inv += lc_popcount(a & ~((low << 1) - 1))
        b ^= low
    return -1 if inv & 1 else 1


def mask_sign(a, b):
    """Sign of the shuffle that sorts the index sets ``a`` then ``b``; zero on overlap."""
    if a < 0 or b < 0 or a >> 63 or b >> 63:
        from ._pykernels import mask_sign as slow
        return slow(a, b)
    return _sign64(a, b)


def wedge_masks(dict f, dict g):
    cdef dict out = {}
    cdef uint64_t ua, ub
    cdef int s
    for ma, ca in f.items():
        if ma >> 63:
            from ._pykernels import wedge_masks as slow
            return slow(f, g)
        ua = ma
        for mb, cb in g.items():
            if mb >> 63:
                from ._pykernels import wedge_masks as slow
                return slow(f, g)
            ub = mb
            if ua & ub:
                continue
            s = _sign64(ua, ub)
            key = ua | ub
            v = out.get(key, 0) + (ca * cb if s > 0 else -(ca * cb))
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def ipoly_mul(dict a, dict b):
    cdef dict out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def ipoly_cross(dict p, dict a, dict f, dict b):
    """Return ``p*a - f*b`` for integer polynomials."""
    cdef dict out = ipoly_mul(p, a)
    for kf, cf in f.items():
        for kb, cb in b.items():
            k = kf + kb
            v = out.get(k, 0) - cf * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def ipoly_exact_div(dict a, dict b, guard):
    """Exact quotient ``a / b``; raises ArithmeticError if ``b`` does not divide ``a``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    cdef dict out = {}
    cdef dict work
    cdef list heap, rest
    if len(b) == 1:
        (kb, cb), = b.items()
        for ka, ca in a.items():
            q, rem = divmod(ca, cb)
            if rem or ((ka | guard) - kb) & guard != guard:
                raise ArithmeticError("inexact polynomial division")
            out[ka - kb] = q
        return out
    lead_b = max(b)
    lead_c = b[lead_b]
    rest = [(k, c) for k, c in b.items() if k != lead_b]
    work = dict(a)
    heap = [-k for k in work]
    heapq.heapify(heap)
    while heap:
        k = -heapq.heappop(heap)
        c = work.get(k)
        if not c:
            continue
        while heap and -heap[0] == k:
            heapq.heappop(heap)
        if ((k | guard) - lead_b) & guard != guard:
            raise ArithmeticError("inexact polynomial division")
        q, rem = divmod(c, lead_c)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        qk = k - lead_b
        out[qk] = q
        del work[k]
        for dk, dc in rest:
            kk = qk + dk
            v = work.get(kk, 0) - q * dc
            if v:
                if kk not in work:
                    heapq.heappush(heap, -kk)
                work[kk] = v
            else:
                work.pop(kk, None)
    return out
