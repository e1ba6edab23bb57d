"""The five classical symmetric pairs as explicit block-matrix data.

Conventions fixed here and relied on everywhere else:

- AI  (gl_n, so_n): orthonormal symmetric form, theta(x) = -x^t,
  g1 = symmetric matrices, Cartan = diag(b_1..b_n), W = S_n.
- AII (gl_2n, sp_2n): skew form J = [[0,I_n],[-I_n,0]], theta(x) = J x^t J,
  g1 = {x : Jx skew}, Cartan = diag(b_1..b_n, b_1..b_n) (each coordinate
  appears once in each Witt half; with this J a diagonal g1 element must
  have equal halves, so the two half-blocks carry the same coordinates),
  W = S_n.
- AIII (gl_{n+m}, gl_n x gl_m), m >= n: theta = conjugation by
  T = diag(I_n, -I_m), g1 = antidiagonal blocks, Cartan upper block
  X = [diag(b), 0_{n x (m-n)}], W = (Z/2)^n x| S_n.
- BDI (so_{n+m}, so_n x so_m), m >= n: same T; g1 members look like
  [[0, X], [-X^t, 0]]; Cartan X as in AIII; W hyperoctahedral (exposed for
  m > n; see the m = n caveat in the CLI gating).
- CI  (sp_2n, gl_n): same J as AII, theta = conjugation by diag(I_n, -I_n),
  g1 = {[[0,X],[Y,0]] : X, Y symmetric}, Cartan X = Y = diag(b),
  W hyperoctahedral.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exact import RMatrix, commutator, det, inverse, mat_mul
from .sampling import (
    DEFAULT_BOUND,
    derive_seed,
    make_rng,
    rand_matrix,
    rand_rational,
    rand_skew,
    rand_symmetric,
)

KINDS = ("AI", "AII", "AIII", "BDI", "CI")
_SIGNED_KINDS = ("AIII", "BDI", "CI")


@dataclass(frozen=True)
class PairDescriptor:
    kind: str
    n: int
    m: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown pair kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.kind in ("AIII", "BDI"):
            if self.m is None:
                raise ValueError(f"{self.kind} needs the second size m")
            if self.m < self.n:
                raise ValueError("m >= n required")
        elif self.m is not None:
            raise ValueError(f"{self.kind} takes no m parameter")

    @property
    def ambient_dim(self) -> int:
        if self.kind == "AI":
            return self.n
        if self.kind in ("AII", "CI"):
            return 2 * self.n
        return self.n + self.m

    @property
    def rank(self) -> int:
        return self.n

    @property
    def signed_weyl(self) -> bool:
        return self.kind in _SIGNED_KINDS


@dataclass(frozen=True)
class CartanPoint:
    coords: tuple  # d rows of n rationals each

    def __init__(self, coords):
        rows = tuple(tuple(Fraction(x) for x in row) for row in coords)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged coordinate rows")
        object.__setattr__(self, "coords", rows)

    @property
    def d(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        return len(self.coords[0]) if self.coords else 0


@dataclass(frozen=True)
class WeylElement:
    permutation: tuple  # 0-based images: j -> permutation[j]
    signs: tuple  # entries in {+1, -1}

    def __post_init__(self):
        perm = tuple(self.permutation)
        signs = tuple(self.signs)
        object.__setattr__(self, "permutation", perm)
        object.__setattr__(self, "signs", signs)
        n = len(perm)
        if sorted(perm) != list(range(n)):
            raise ValueError("permutation is not a bijection of 0..n-1")
        if len(signs) != n or any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be n values in {+1,-1}")

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self o other: acting by `other` first, then by `self`."""
        n = len(self.permutation)
        if len(other.permutation) != n:
            raise ValueError("size mismatch")
        perm = tuple(self.permutation[other.permutation[j]] for j in range(n))
        signs = tuple(self.signs[other.permutation[j]] * other.signs[j]
                      for j in range(n))
        return WeylElement(perm, signs)


def random_weyl(p: PairDescriptor, seed: int) -> WeylElement:
    rng = make_rng(derive_seed(seed, "weyl"))
    perm = list(range(p.n))
    rng.shuffle(perm)
    if p.signed_weyl:
        signs = tuple(rng.choice((1, -1)) for _ in range(p.n))
    else:
        signs = (1,) * p.n
    return WeylElement(tuple(perm), signs)


def random_cartan_point(p: PairDescriptor, d: int, seed: int,
                        bound: int = DEFAULT_BOUND) -> CartanPoint:
    rng = make_rng(derive_seed(seed, "cartan"))
    return CartanPoint([[rand_rational(rng, bound) for _ in range(p.n)]
                        for _ in range(d)])


# ------------------------------------------------------------ forms

def symplectic_form(n: int) -> RMatrix:
    """J = [[0, I_n], [-I_n, 0]], the skew form for AII and CI."""
    z, i = RMatrix.zeros(n), RMatrix.identity(n)
    return RMatrix.block([[z, i], [-i, z]])


def _block_sign(p: PairDescriptor) -> RMatrix:
    n = p.n
    m = p.m if p.kind in ("AIII", "BDI") else p.n
    return RMatrix.diag([1] * n + [-1] * m)


def _check_size(p: PairDescriptor, x: RMatrix):
    nn = p.ambient_dim
    if x.rows != nn or x.cols != nn:
        raise ValueError(f"expected {nn}x{nn} ambient matrix, got {x.rows}x{x.cols}")


# ------------------------------------------------------------ theta / g1

def theta(p: PairDescriptor, x: RMatrix) -> RMatrix:
    """The defining involution of the pair, on the ambient matrix algebra."""
    _check_size(p, x)
    if p.kind == "AI":
        return -x.transpose()
    if p.kind == "AII":
        j = symplectic_form(p.n)
        return mat_mul(mat_mul(j, x.transpose()), j)
    t = _block_sign(p)
    return mat_mul(mat_mul(t, x), t)


def in_ambient_algebra(p: PairDescriptor, x: RMatrix) -> bool:
    """Membership in g itself: gl (AI/AII/AIII), so (BDI), sp (CI)."""
    _check_size(p, x)
    if p.kind == "BDI":
        return x.is_skew()
    if p.kind == "CI":
        return mat_mul(symplectic_form(p.n), x).is_symmetric()
    return True


def _g1_block_shape(p: PairDescriptor, x: RMatrix) -> bool:
    n = p.n
    if p.kind == "AI":
        return x.is_symmetric()
    if p.kind == "AII":
        return mat_mul(symplectic_form(n), x).is_skew()
    m = p.m if p.kind in ("AIII", "BDI") else n
    if not (x.submatrix(0, n, 0, n).is_zero()
            and x.submatrix(n, n + m, n, n + m).is_zero()):
        return False
    q = x.submatrix(0, n, n, n + m)
    r = x.submatrix(n, n + m, 0, n)
    if p.kind == "AIII":
        return True
    if p.kind == "BDI":
        return r == -q.transpose()
    return q.is_symmetric() and r.is_symmetric()


def is_in_g1(p: PairDescriptor, x: RMatrix) -> bool:
    """True iff theta(x) = -x within g; cross-checked against the explicit
    block/symmetry shape of the case."""
    _check_size(p, x)
    by_theta = in_ambient_algebra(p, x) and theta(p, x) == -x
    by_shape = _g1_block_shape(p, x)
    if by_theta != by_shape:
        raise AssertionError(
            f"g1 membership tests disagree for {p.kind}: theta-test "
            f"{by_theta}, shape-test {by_shape}"
        )
    return by_theta


# ------------------------------------------------------------ Cartan

def cartan_embed(p: PairDescriptor, pt: CartanPoint):
    """Embed a Cartan point as d ambient matrices (each in g1, pairwise
    commuting; both facts are verified on every call)."""
    if pt.d and pt.n != p.n:
        raise ValueError(f"coordinate rows have length {pt.n}, expected {p.n}")
    mats = [_cartan_matrix(p, row) for row in pt.coords]
    for x in mats:
        if not is_in_g1(p, x):
            raise AssertionError("Cartan embedding left g1")
    for a, b in itertools.combinations(mats, 2):
        if not commutator(a, b).is_zero():
            raise AssertionError("Cartan embedding not commuting")
    return mats


def _cartan_matrix(p: PairDescriptor, b) -> RMatrix:
    n = p.n
    if p.kind == "AI":
        return RMatrix.diag(b)
    if p.kind == "AII":
        return RMatrix.diag(list(b) + list(b))
    if p.kind == "CI":
        d = RMatrix.diag(b)
        z = RMatrix.zeros(n)
        return RMatrix.block([[z, d], [d, z]])
    m = p.m
    x = RMatrix.block([[RMatrix.diag(b), RMatrix.zeros(n, m - n)]])
    if p.kind == "AIII":
        lower = x.transpose()
    else:  # BDI
        lower = -x.transpose()
    return RMatrix.block([[RMatrix.zeros(n), x], [lower, RMatrix.zeros(m)]])


def weyl_act(p: PairDescriptor, w: WeylElement, pt: CartanPoint) -> CartanPoint:
    """Diagonal action on Cartan coordinates: the same signed permutation is
    applied to every row."""
    n = p.n
    if len(w.permutation) != n:
        raise ValueError("Weyl element size mismatch")
    if pt.d and pt.n != n:
        raise ValueError("Cartan point size mismatch")
    if not p.signed_weyl and any(s == -1 for s in w.signs):
        raise ValueError(f"{p.kind} little Weyl group has no sign flips")
    rows = []
    for row in pt.coords:
        out = [None] * n
        for jp in range(n):
            out[w.permutation[jp]] = w.signs[jp] * row[jp]
        rows.append(out)
    return CartanPoint(rows)


# ------------------------------------------------------------ G0 sampling

def cayley(s: RMatrix) -> RMatrix:
    """(I - S)(I + S)^{-1}; raises ValueError at the pole det(I+S) = 0."""
    ident = RMatrix.identity(s.rows)
    return mat_mul(ident - s, inverse(ident + s))


def _sample_invertible(rng, n: int, bound: int) -> RMatrix:
    while True:
        g = rand_matrix(rng, n, bound=bound)
        if det(g) != 0:
            return g


def sample_g0(p: PairDescriptor, seed: int, bound: int = DEFAULT_BOUND) -> RMatrix:
    """Exact random element of G0 in its ambient embedding.

    AI: SO_n Cayley; AII: Sp_2n Cayley of a Hamiltonian; AIII: block
    GL_n x GL_m; BDI: block SO_n x SO_m; CI: block (A, (A^t)^{-1}).
    Deterministic in the seed; Cayley poles are resampled internally.
    """
    for attempt in itertools.count():
        rng = make_rng(derive_seed(seed, "g0", attempt))
        try:
            return _sample_g0_once(p, rng, bound)
        except ValueError:
            continue


def _sample_g0_once(p: PairDescriptor, rng, bound: int) -> RMatrix:
    n = p.n
    if p.kind == "AI":
        return cayley(rand_skew(rng, n, bound))
    if p.kind == "AII":
        j = symplectic_form(n)
        ham = mat_mul(-j, rand_symmetric(rng, 2 * n, bound))
        return cayley(ham)
    if p.kind == "AIII":
        a = _sample_invertible(rng, n, bound)
        b = _sample_invertible(rng, p.m, bound)
        z1, z2 = RMatrix.zeros(n, p.m), RMatrix.zeros(p.m, n)
        return RMatrix.block([[a, z1], [z2, b]])
    if p.kind == "BDI":
        a = cayley(rand_skew(rng, n, bound))
        b = cayley(rand_skew(rng, p.m, bound))
        z1, z2 = RMatrix.zeros(n, p.m), RMatrix.zeros(p.m, n)
        return RMatrix.block([[a, z1], [z2, b]])
    # CI
    a = _sample_invertible(rng, n, bound)
    z = RMatrix.zeros(n)
    return RMatrix.block([[a, z], [z, inverse(a.transpose())]])


def random_g1(p: PairDescriptor, seed: int, bound: int = DEFAULT_BOUND) -> RMatrix:
    """Exact random element of the odd part, not necessarily semisimple.

    Samples a random element of the ambient algebra and projects onto the
    (-1) eigenspace of the involution: x = (y - theta(y)) / 2.
    """
    rng = make_rng(derive_seed(seed, "g1"))
    nn = p.ambient_dim
    if p.kind == "BDI":
        y = rand_skew(rng, nn, bound)
    elif p.kind == "CI":
        y = mat_mul(symplectic_form(p.n), rand_symmetric(rng, nn, bound))
    else:
        y = rand_matrix(rng, nn, bound=bound)
    x = (y - theta(p, y)) * Fraction(1, 2)
    assert is_in_g1(p, x)
    return x


def adjoint(p: PairDescriptor, g: RMatrix, x: RMatrix) -> RMatrix:
    """g x g^{-1}, exactly; preservation of g1 is verified when x is in g1."""
    _check_size(p, x)
    _check_size(p, g)
    y = mat_mul(mat_mul(g, x), inverse(g))
    if is_in_g1(p, x) and not is_in_g1(p, y):
        raise ValueError("conjugation left g1: g is not an element of G0")
    return y
