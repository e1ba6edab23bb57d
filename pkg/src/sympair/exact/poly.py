"""Exact univariate polynomials over the rationals, plus charpoly."""
from __future__ import annotations

from fractions import Fraction

from . import _backend
from .matrix import RMatrix, _frac, _scaled_all, mat_mul


class RPoly:
    """Polynomial with Fraction coefficients, ascending degree order.

    Trailing zero coefficients are stripped; the zero polynomial has an
    empty coefficient tuple and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def from_roots(cls, roots) -> "RPoly":
        """Monic polynomial prod (t - r)."""
        out = cls([1])
        for r in roots:
            out = out * cls([-_frac(r), 1])
        return out

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    def __eq__(self, other):
        if not isinstance(other, RPoly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __add__(self, other: "RPoly") -> "RPoly":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return RPoly(out)

    def __sub__(self, other: "RPoly") -> "RPoly":
        return self + RPoly([-x for x in other._c])

    def __mul__(self, other):
        if not isinstance(other, RPoly):
            return RPoly([x * _frac(other) for x in self._c])
        a, b = self._c, other._c
        if not a or not b:
            return RPoly([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RPoly(out)

    __rmul__ = __mul__

    def __call__(self, t) -> Fraction:
        t = _frac(t)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * t + c
        return acc

    def eval_matrix(self, m: RMatrix) -> RMatrix:
        """Evaluate at a square matrix (Horner)."""
        if not m.is_square():
            raise ValueError("polynomial evaluation needs a square matrix")
        n = m.rows
        acc = RMatrix.zeros(n, n)
        ident = RMatrix.identity(n)
        for c in reversed(self._c):
            acc = mat_mul(acc, m) + c * ident
        return acc

    def sqrt(self) -> "RPoly | None":
        """Exact monic square root, or None if self is not a perfect square
        of a monic polynomial."""
        if not self._c or not self.is_monic() or self.degree % 2:
            return None
        n = self.degree // 2
        s = [Fraction(0)] * (n + 1)
        s[n] = Fraction(1)
        p = list(self._c)
        for k in range(n - 1, -1, -1):
            acc = p[n + k]
            for i in range(k + 1, n):
                j = n + k - i
                if k < j < n:
                    acc -= s[i] * s[j]
            s[k] = acc / 2
        cand = RPoly(s)
        if cand * cand == self:
            return cand
        return None

    def __repr__(self):
        return f"RPoly({list(self._c)})"


def charpoly(a: RMatrix) -> RPoly:
    """Characteristic polynomial det(tI - a), exact, monic."""
    if not a.is_square():
        raise ValueError("charpoly of non-square matrix")
    n = a.rows
    ints, q = _scaled_all(a)
    cs = _backend.icharpoly(ints, n)
    return RPoly([Fraction(cs[j], q ** (n - j)) for j in range(n + 1)])
