"""Pure-Python implementations of the hot inner loops.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
``lieclass.kernels`` picks one of the two at import time.

Conventions
-----------
* Integer matrices are lists of lists of Python ints.
* Sparse alternating forms are dicts mapping a bitmask (bit ``i`` set when
  basis covector ``i`` takes part in the monomial) to a coefficient.
* Integer polynomials are dicts mapping a packed exponent key to a nonzero
  int.  A key stores the total degree in its top field and one field per
  variable below it, each ``FIELD_BITS`` wide; integer order on keys is then
  graded lexicographic order, and monomial multiplication is key addition.
"""
import heapq

FIELD_BITS = 8


def int_rref(rows, ncols):
    """Fraction-free Gauss-Jordan elimination over the integers.

    Returns ``(rank, pivots, m)`` where ``m`` (a new matrix) equals ``d``
    times the reduced row echelon form of ``rows`` and ``d`` is the common
    value of every pivot entry.  Each update divides exactly by the previous
    pivot, so entries stay bounded by minors of the input.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    pivots = []
    prev = 1
    r = 0
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
        for i in range(nrows):
            if i == r:
                continue
            row = m[i]
            f = row[c]
            if f == 0:
                if piv != prev:
                    for j in range(ncols):
                        if row[j]:
                            row[j] = (piv * row[j]) // prev
                continue
            for j in range(ncols):
                row[j] = (piv * row[j] - f * prow[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return r, pivots, m


def int_rank(rows, ncols):
    """Rank of an integer matrix by fraction-free (Bareiss) forward elimination."""
    m = [list(r) for r in rows]
    nrows = len(m)
    prev = 1
    r = 0
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


def mask_sign(a, b):
    """Sign of the shuffle that sorts the index sets ``a`` then ``b``.

    Zero when the sets overlap.
    """
    if a & b:
        return 0
    inversions = 0
    while b:
        low = b & -b
        inversions += (a & ~((low << 1) - 1)).bit_count()
        b ^= low
    return -1 if inversions & 1 else 1


def wedge_masks(f, g):
    out = {}
    for ma, ca in f.items():
        for mb, cb in g.items():
            if ma & mb:
                continue
            s = mask_sign(ma, mb)
            key = ma | mb
            v = out.get(key, 0) + (ca * cb if s > 0 else -(ca * cb))
            if v:
                out[key] = v
            else:
                out.pop(key, None)
    return out


def ipoly_mul(a, b):
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def ipoly_cross(p, a, f, b):
    """Return ``p*a - f*b`` for integer polynomials."""
    out = ipoly_mul(p, a)
    for kf, cf in f.items():
        for kb, cb in b.items():
            k = kf + kb
            v = out.get(k, 0) - cf * cb
            if v:
                out[k] = v
            else:
                del out[k]
    return out


def ipoly_exact_div(a, b, guard):
    """Exact quotient ``a / b``; raises ArithmeticError if ``b`` does not divide ``a``.

    ``guard`` has the top bit of every exponent field set and is used for
    the branch-free divisibility test on packed keys.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(b) == 1:
        (kb, cb), = b.items()
        out = {}
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
    out = {}
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
