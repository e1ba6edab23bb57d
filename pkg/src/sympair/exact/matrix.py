"""Exact rational matrices.

RMatrix is immutable, stores Fraction entries row-major, and never rounds:
every operation either returns an exact value or raises.  The elimination
style operations (det, rank, pfaffian) scale to integer matrices and run a
fraction-free kernel, then undo the scaling exactly.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm

from . import _backend

Rational = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"entries must be exact rationals, got {type(x).__name__}")


class RMatrix:
    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(_frac(x) for x in entries)
        if rows < 0 or cols < 0:
            raise ValueError("negative dimensions")
        if len(entries) != rows * cols:
            raise ValueError(
                f"entries length {len(entries)} != {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self._e = entries

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows) -> "RMatrix":
        rows = [list(r) for r in rows]
        r = len(rows)
        c = len(rows[0]) if rows else 0
        if any(len(row) != c for row in rows):
            raise ValueError("ragged rows")
        return cls(r, c, [x for row in rows for x in row])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RMatrix":
        if cols is None:
            cols = rows
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        e = [0] * (n * n)
        for i in range(n):
            e[i * n + i] = 1
        return cls(n, n, e)

    @classmethod
    def diag(cls, values) -> "RMatrix":
        values = list(values)
        n = len(values)
        e = [0] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = v
        return cls(n, n, e)

    @classmethod
    def block(cls, grid) -> "RMatrix":
        """Assemble from a 2d grid of conforming RMatrix blocks."""
        grid = [list(row) for row in grid]
        if not grid or not grid[0]:
            raise ValueError("empty block grid")
        row_heights = [row[0].rows for row in grid]
        col_widths = [b.cols for b in grid[0]]
        for gi, row in enumerate(grid):
            if len(row) != len(col_widths):
                raise ValueError("ragged block grid")
            for gj, b in enumerate(row):
                if b.rows != row_heights[gi] or b.cols != col_widths[gj]:
                    raise ValueError("non-conforming blocks")
        rows = sum(row_heights)
        cols = sum(col_widths)
        e = [Fraction(0)] * (rows * cols)
        r0 = 0
        for gi, row in enumerate(grid):
            c0 = 0
            for gj, b in enumerate(row):
                for i in range(b.rows):
                    base = (r0 + i) * cols + c0
                    be = b._e
                    for j in range(b.cols):
                        e[base + j] = be[i * b.cols + j]
                c0 += col_widths[gj]
            r0 += row_heights[gi]
        return cls(rows, cols, e)

    # -- access ------------------------------------------------------------

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self._e[i * self.cols + j]

    def row(self, i: int):
        return self._e[i * self.cols:(i + 1) * self.cols]

    def to_lists(self):
        c = self.cols
        return [list(self._e[i * c:(i + 1) * c]) for i in range(self.rows)]

    def submatrix(self, row_start, row_stop, col_start, col_stop) -> "RMatrix":
        rs = range(row_start, row_stop)
        cs = range(col_start, col_stop)
        e = [self._e[i * self.cols + j] for i in rs for j in cs]
        return RMatrix(len(rs), len(cs), e)

    # -- structure tests ----------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self._e)

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        e = self._e
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))

    def is_skew(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        e = self._e
        if any(e[i * n + i] != 0 for i in range(n)):
            return False
        return all(e[i * n + j] == -e[j * n + i] for i in range(n) for j in range(i + 1, n))

    # -- arithmetic ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, RMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._e == other._e

    __hash__ = None

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.rows, self.cols, [-x for x in self._e])

    def __add__(self, other: "RMatrix") -> "RMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in addition")
        return RMatrix(self.rows, self.cols, [x + y for x, y in zip(self._e, other._e)])

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in subtraction")
        return RMatrix(self.rows, self.cols, [x - y for x, y in zip(self._e, other._e)])

    def __mul__(self, other):
        if isinstance(other, RMatrix):
            return mat_mul(self, other)
        return RMatrix(self.rows, self.cols, [x * _frac(other) for x in self._e])

    def __rmul__(self, other):
        return RMatrix(self.rows, self.cols, [_frac(other) * x for x in self._e])

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "RMatrix":
        r, c, e = self.rows, self.cols, self._e
        return RMatrix(c, r, [e[i * c + j] for j in range(c) for i in range(r)])

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of non-square matrix")
        n = self.cols
        return sum((self._e[i * n + i] for i in range(n)), Fraction(0))

    def __repr__(self):
        return f"RMatrix({self.rows}x{self.cols}, {self.to_lists()})"


# -- integer scaling -----------------------------------------------------

def _scaled_rows(m: RMatrix):
    """Per-row integer scaling: (flat ints, list of row denominators)."""
    c = m.cols
    e = m._e
    ints = [0] * (m.rows * c)
    qs = []
    for i in range(m.rows):
        base = i * c
        q = 1
        for j in range(c):
            q = lcm(q, e[base + j].denominator)
        qs.append(q)
        for j in range(c):
            x = e[base + j]
            ints[base + j] = x.numerator * (q // x.denominator)
    return ints, qs


def _scaled_all(m: RMatrix):
    """Global integer scaling: (flat ints, common denominator)."""
    q = 1
    for x in m._e:
        q = lcm(q, x.denominator)
    ints = [x.numerator * (q // x.denominator) for x in m._e]
    return ints, q


# -- operations ------------------------------------------------------------

def mat_mul(a: RMatrix, b: RMatrix) -> RMatrix:
    """Exact matrix product."""
    if a.cols != b.rows:
        raise ValueError(f"dimension mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    ia, qa = _scaled_all(a)
    ib, qb = _scaled_all(b)
    flat = _backend.imatmul(ia, ib, a.rows, a.cols, b.cols)
    q = qa * qb
    if q == 1:
        return RMatrix(a.rows, b.cols, [Fraction(v) for v in flat])
    return RMatrix(a.rows, b.cols, [Fraction(v, q) for v in flat])


def mat_pow(a: RMatrix, k: int) -> RMatrix:
    if not a.is_square():
        raise ValueError("power of non-square matrix")
    if k < 0:
        raise ValueError("negative power")
    out = RMatrix.identity(a.rows)
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def commutator(a: RMatrix, b: RMatrix) -> RMatrix:
    """[a, b] = ab - ba."""
    if not (a.is_square() and b.is_square() and a.rows == b.rows):
        raise ValueError("commutator needs square matrices of equal size")
    return mat_mul(a, b) - mat_mul(b, a)


def det(a: RMatrix) -> Fraction:
    """Exact determinant (Bareiss)."""
    if not a.is_square():
        raise ValueError("determinant of non-square matrix")
    ints, qs = _scaled_rows(a)
    d = _backend.idet(ints, a.rows)
    q = 1
    for x in qs:
        q *= x
    return Fraction(d, q)


def rank(a: RMatrix) -> int:
    """Exact rank (fraction-free elimination)."""
    ints, _ = _scaled_rows(a)
    return _backend.irank(ints, a.rows, a.cols)


def pfaffian(a: RMatrix) -> Fraction:
    """Exact Pfaffian of a skew-symmetric matrix of even size.

    Sign convention: pfaffian of the standard block [[0, I], [-I, 0]] is +1.
    """
    if not a.is_square():
        raise ValueError("pfaffian of non-square matrix")
    n = a.rows
    if n % 2:
        raise ValueError("pfaffian needs even size")
    if not a.is_skew():
        raise ValueError("pfaffian needs a skew-symmetric matrix")
    # symmetric scaling A -> D A D with integer diagonal D
    ints, qs = _scaled_rows(a)
    for i in range(n):
        for j in range(n):
            ints[i * n + j] *= qs[j]
    pf = _backend.ipfaffian(ints, n)
    half = n // 2
    if (half * (half - 1) // 2) % 2:
        pf = -pf
    q = 1
    for x in qs:
        q *= x
    return Fraction(pf, q)


def inverse(a: RMatrix) -> RMatrix:
    """Exact inverse via Gauss-Jordan elimination; raises on singular input."""
    if not a.is_square():
        raise ValueError("inverse of non-square matrix")
    n = a.rows
    work = [list(a.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if work[r][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        p = work[c][c]
        work[c] = [x / p for x in work[c]]
        for r in range(n):
            if r != c and work[r][c] != 0:
                f = work[r][c]
                work[r] = [x - f * y for x, y in zip(work[r], work[c])]
    return RMatrix(n, n, [work[i][n + j] for i in range(n) for j in range(n)])


def kron(a: RMatrix, b: RMatrix) -> RMatrix:
    """Kronecker product a (x) b."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    e = [Fraction(0)] * (rows * cols)
    for i in range(a.rows):
        for j in range(a.cols):
            v = a._e[i * a.cols + j]
            if v == 0:
                continue
            for k in range(b.rows):
                base = (i * b.rows + k) * cols + j * b.cols
                for l in range(b.cols):
                    e[base + l] = v * b._e[k * b.cols + l]
    return RMatrix(rows, cols, e)
