# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Integer kernels, compiled backend.

Same contracts as _purekernels: row-major flat lists of Python ints, exact
arithmetic throughout (entries are arbitrary-precision PyObject ints; the
win over the pure backend is compiled loop and indexing overhead).
"""

BACKEND_NAME = "cython"


def imatmul(list a, list b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m):
    """(n x k) @ (k x m) -> flat (n x m) integer product."""
    cdef Py_ssize_t i, j, t, ia, ib, io
    cdef object v, acc
    cdef list out = [0] * (n * m)
    for i in range(n):
        ia = i * k
        io = i * m
        for t in range(k):
            v = a[ia + t]
            if v:
                ib = t * m
                for j in range(m):
                    acc = out[io + j]
                    out[io + j] = acc + v * b[ib + j]
    return out


def idet(list a, Py_ssize_t n):
    """Determinant via Bareiss fraction-free elimination."""
    cdef Py_ssize_t c, r, i, j, pivot_row, rc, rp, ri
    cdef object p, prev, ai_c, tmp
    cdef int sign = 1
    if n == 0:
        return 1
    a = list(a)
    prev = 1
    for c in range(n - 1):
        pivot_row = -1
        for r in range(c, n):
            if a[r * n + c]:
                pivot_row = r
                break
        if pivot_row < 0:
            return 0
        if pivot_row != c:
            rc = c * n
            rp = pivot_row * n
            for j in range(n):
                tmp = a[rc + j]
                a[rc + j] = a[rp + j]
                a[rp + j] = tmp
            sign = -sign
        p = a[c * n + c]
        for i in range(c + 1, n):
            ri = i * n
            ai_c = a[ri + c]
            rc = c * n
            for j in range(c + 1, n):
                a[ri + j] = (a[ri + j] * p - ai_c * a[rc + j]) // prev
            a[ri + c] = 0
        prev = p
    if sign < 0:
        return -a[n * n - 1]
    return a[n * n - 1]


def irank(list a, Py_ssize_t rows, Py_ssize_t cols):
    """Rank via fraction-free elimination with row pivoting."""
    cdef Py_ssize_t c, r, i, j, rank, pivot_row, rr, rp, ri
    cdef object p, prev, ai_c, tmp
    a = list(a)
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot_row = -1
        for r in range(rank, rows):
            if a[r * cols + c]:
                pivot_row = r
                break
        if pivot_row < 0:
            continue
        if pivot_row != rank:
            rr = rank * cols
            rp = pivot_row * cols
            for j in range(cols):
                tmp = a[rr + j]
                a[rr + j] = a[rp + j]
                a[rp + j] = tmp
        p = a[rank * cols + c]
        rr = rank * cols
        for i in range(rank + 1, rows):
            ri = i * cols
            ai_c = a[ri + c]
            for j in range(c + 1, cols):
                a[ri + j] = (a[ri + j] * p - ai_c * a[rr + j]) // prev
            a[ri + c] = 0
        prev = p
        rank += 1
    return rank


def icharpoly(list a, Py_ssize_t n):
    """Coefficients (ascending) of det(tI - A) by Faddeev-LeVerrier."""
    cdef Py_ssize_t i, k
    cdef object c, tr
    cdef list cs = [0] * (n + 1)
    cdef list nmat, m
    cs[n] = 1
    if n == 0:
        return cs
    nmat = [0] * (n * n)
    for k in range(1, n + 1):
        c = cs[n - k + 1]
        m = list(nmat)
        for i in range(n):
            m[i * n + i] = m[i * n + i] + c
        nmat = imatmul(a, m, n, n, n)
        tr = 0
        for i in range(n):
            tr = tr + nmat[i * n + i]
        cs[n - k] = -(tr // k)
    return cs


def ipfaffian(list a, Py_ssize_t n):
    """Combinatorial-convention Pfaffian of a skew flat matrix, even n."""
    cdef Py_ssize_t o, j, r, kk, ll, pivot, ro, r1, rp, rk, rn
    cdef object p, prev, a1k, a0k, v, tmp
    cdef int sign = 1
    if n == 0:
        return 1
    a = list(a)
    prev = 1
    for o in range(0, n - 2, 2):
        pivot = -1
        for j in range(o + 1, n):
            if a[o * n + j]:
                pivot = j
                break
        if pivot < 0:
            return 0
        if pivot != o + 1:
            for r in range(n):
                rn = r * n
                tmp = a[rn + o + 1]
                a[rn + o + 1] = a[rn + pivot]
                a[rn + pivot] = tmp
            r1 = (o + 1) * n
            rp = pivot * n
            for j in range(n):
                tmp = a[r1 + j]
                a[r1 + j] = a[rp + j]
                a[rp + j] = tmp
            sign = -sign
        p = a[o * n + o + 1]
        ro = o * n
        r1 = (o + 1) * n
        for kk in range(o + 2, n):
            rk = kk * n
            a1k = a[r1 + kk]
            a0k = a[ro + kk]
            for ll in range(kk + 1, n):
                v = (p * a[rk + ll] + a1k * a[ro + ll] - a0k * a[r1 + ll]) // prev
                a[rk + ll] = v
                a[ll * n + kk] = -v
        prev = p
    if sign < 0:
        return -a[(n - 2) * n + n - 1]
    return a[(n - 2) * n + n - 1]
