"""Integer kernels, pure-Python backend.

All kernels operate on row-major flat lists of Python ints and perform no
rounding anywhere: divisions are the exact divisions of fraction-free
elimination.  The compiled backend (_ckernels) implements the same five
functions with the same contracts.
"""

BACKEND_NAME = "pure"


def imatmul(a, b, n, k, m):
    """(n x k) @ (k x m) -> flat (n x m) integer product."""
    out = [0] * (n * m)
    for i in range(n):
        ia = i * k
        io = i * m
        for t in range(k):
            v = a[ia + t]
            if v:
                ib = t * m
                for j in range(m):
                    out[io + j] += v * b[ib + j]
    return out


def idet(a, n):
    """Determinant via Bareiss fraction-free elimination. Mutates a copy."""
    if n == 0:
        return 1
    a = list(a)
    sign = 1
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
            rc, rp = c * n, pivot_row * n
            for j in range(n):
                a[rc + j], a[rp + j] = a[rp + j], a[rc + j]
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
    return sign * a[n * n - 1]


def irank(a, rows, cols):
    """Rank via fraction-free elimination with row pivoting."""
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
            rr, rp = rank * cols, pivot_row * cols
            for j in range(cols):
                a[rr + j], a[rp + j] = a[rp + j], a[rr + j]
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


def icharpoly(a, n):
    """Coefficients (ascending) of det(tI - A) by Faddeev-LeVerrier.

    Stays in Z for integer input: the trace divisions are exact.
    """
    cs = [0] * (n + 1)
    cs[n] = 1
    if n == 0:
        return cs
    nmat = [0] * (n * n)
    for k in range(1, n + 1):
        c = cs[n - k + 1]
        m = list(nmat)
        for i in range(n):
            m[i * n + i] += c
        nmat = imatmul(a, m, n, n, n)
        tr = 0
        for i in range(n):
            tr += nmat[i * n + i]
        cs[n - k] = -(tr // k)
    return cs


def ipfaffian(a, n):
    """Combinatorial-convention Pfaffian of a skew flat matrix, even n.

    Fraction-free skew elimination; trailing updates divide exactly by the
    previous pivot, so the surviving 2x2 entry is the Pfaffian up to the
    row-swap sign.
    """
    if n == 0:
        return 1
    a = list(a)
    sign = 1
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
                a[rn + o + 1], a[rn + pivot] = a[rn + pivot], a[rn + o + 1]
            r1, rp = (o + 1) * n, pivot * n
            for jj in range(n):
                a[r1 + jj], a[rp + jj] = a[rp + jj], a[r1 + jj]
            sign = -sign
        p = a[o * n + o + 1]
        ro, r1 = o * n, (o + 1) * n
        for kk in range(o + 2, n):
            rk = kk * n
            a1k = a[r1 + kk]
            a0k = a[ro + kk]
            for ll in range(kk + 1, n):
                v = (p * a[rk + ll] + a1k * a[ro + ll] - a0k * a[r1 + ll]) // prev
                a[rk + ll] = v
                a[ll * n + kk] = -v
        prev = p
    return sign * a[(n - 2) * n + n - 1]
