"""Invariant generators: trace words, the Pfaffian norm, and Kronecker
determinant invariants, together with their evaluation on commuting tuples
and their restriction images on Cartan points.

A trace word has two shapes depending on the case.  For AI and AII it is an
exponent vector a = (a_1, ..., a_d) and evaluates to Tr(x_1^{a_1} ... x_d^{a_d}).
For AIII, CI and BDI it is a sequence of index pairs (n_i, m_i) with entries
in 1..d, evaluating to Tr of the product of the block factors Q_{n_i} R_{m_i}
(AIII, CI) or Q_{n_i} Q_{m_i}^T (BDI).  Restriction to a Cartan point is a
closed-form symmetric function of the coordinates in every case.

Recipes serialize to a compact text grammar, e.g. ``AI:tr[1,0,2]``,
``CI:tr[(1,1),(1,2)]``, ``BDI:kron[2;1/1,0/1;0/1,1/1|2/1,0/1;0/1,3/1]``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import RMatrix, det, kron, mat_mul, pfaffian
from .exact.poly import RPoly, charpoly
from .pairs import CartanPoint, PairDescriptor, is_in_g1, symplectic_form
from .tuples import CommutingTuple, block_parts

EXPONENT_KINDS = ("AI", "AII")
PAIR_KINDS = ("AIII", "BDI", "CI")

# Default total-degree cap used when enumerating generator words.
DEFAULT_DEGREE_CAP = 6


def rat_str(q) -> str:
    """Canonical exact string form of a rational: always "num/den"."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class TraceWord:
    """One generator: an exponent vector (AI/AII) or pair sequence (others).

    Constant words (all exponents zero, or an empty pair sequence) are
    rejected unless allow_constant is set; they evaluate to a trace of an
    identity matrix and carry no information.
    """
    kind: str
    exponents: tuple | None = None
    pairs: tuple | None = None
    allow_constant: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.kind in EXPONENT_KINDS:
            if self.pairs is not None or self.exponents is None:
                raise ValueError(f"{self.kind} words take an exponent vector")
            exps = tuple(self.exponents)
            for a in exps:
                if not isinstance(a, int) or a < 0:
                    raise ValueError("exponents must be non-negative integers")
            if not exps or not any(exps):
                if not self.allow_constant:
                    raise ValueError("constant word rejected")
            object.__setattr__(self, "exponents", exps)
        elif self.kind in PAIR_KINDS:
            if self.exponents is not None or self.pairs is None:
                raise ValueError(f"{self.kind} words take index pairs")
            prs = tuple(tuple(pr) for pr in self.pairs)
            for pr in prs:
                if len(pr) != 2:
                    raise ValueError("each factor is an index pair")
                for idx in pr:
                    if not isinstance(idx, int) or idx < 1:
                        raise ValueError("pair indices are 1-based positive")
            if not prs and not self.allow_constant:
                raise ValueError("constant word rejected")
            object.__setattr__(self, "pairs", prs)
        else:
            raise ValueError(f"unknown case {self.kind!r}")

    @property
    def degree(self) -> int:
        """Total degree in Cartan coordinates."""
        if self.exponents is not None:
            return sum(self.exponents)
        return 2 * len(self.pairs)

    @property
    def arity(self) -> int:
        """Smallest tuple length d this word can be evaluated on."""
        if self.exponents is not None:
            return len(self.exponents)
        return max((max(pr) for pr in self.pairs), default=0)


@dataclass(frozen=True)
class KroneckerDetInvariant:
    """det(T_1 (x) A_1 + ... + T_d (x) A_d) with fixed square coefficient
    matrices T_i, evaluated on the square blocks A_i of a BDI tuple with
    equal block sizes."""
    r: int
    t_mats: tuple

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("block count size must be at least 1")
        mats = tuple(self.t_mats)
        if not mats:
            raise ValueError("at least one coefficient matrix required")
        for t in mats:
            if t.rows != self.r or t.cols != self.r:
                raise ValueError("coefficient matrices must all be r x r")
        object.__setattr__(self, "t_mats", mats)

    @property
    def d(self) -> int:
        return len(self.t_mats)


def _cached_power(t: CommutingTuple, i: int, e: int) -> RMatrix:
    key = ("pow", i, e)
    if key not in t._cache:
        if e == 0:
            t._cache[key] = RMatrix.identity(t.pair.ambient_dim)
        else:
            t._cache[key] = mat_mul(_cached_power(t, i, e - 1), t.mats[i])
    return t._cache[key]


def _block_factor(t: CommutingTuple, ni: int, mi: int) -> RMatrix:
    """The n x n factor for pair (ni, mi), 1-based, cached per tuple."""
    key = ("factor", ni, mi)
    if key not in t._cache:
        blocks = block_parts(t)
        q = blocks[ni - 1][0]
        if t.pair.kind == "BDI":
            other = blocks[mi - 1][0].transpose()
        else:
            other = blocks[mi - 1][1]
        t._cache[key] = mat_mul(q, other)
    return t._cache[key]


def _check_word_tuple(w: TraceWord, t: CommutingTuple):
    if w.kind != t.pair.kind:
        raise ValueError(f"word case {w.kind} does not match tuple case "
                         f"{t.pair.kind}")
    if w.arity > t.d:
        raise ValueError("word index out of range for tuple length")
    if w.exponents is not None and len(w.exponents) != t.d:
        raise ValueError("exponent vector length must equal tuple length")


def word_product(w: TraceWord, t: CommutingTuple) -> RMatrix:
    """The matrix whose trace the word evaluates: the ambient product
    x_1^{a_1}...x_d^{a_d}, or the n x n product of block factors."""
    _check_word_tuple(w, t)
    if w.exponents is not None:
        acc = RMatrix.identity(t.pair.ambient_dim)
        for i, a in enumerate(w.exponents):
            if a:
                acc = mat_mul(acc, _cached_power(t, i, a))
        return acc
    acc = RMatrix.identity(t.pair.n)
    for ni, mi in w.pairs:
        acc = mat_mul(acc, _block_factor(t, ni, mi))
    return acc


def eval_trace_word(w: TraceWord, t: CommutingTuple) -> Fraction:
    """Exact value of the word on the tuple."""
    return word_product(w, t).trace()


def restrict_trace_word(w: TraceWord, pt: CartanPoint) -> Fraction:
    """Closed-form restriction of the word to a Cartan point.

    AI sums prod_i b_j(y_i)^{a_i} over j; AII carries an extra factor 2.
    The pair cases sum prod over factors of b_j(y_{n_i}) b_j(y_{m_i}).
    """
    if w.exponents is not None:
        if len(w.exponents) != pt.d:
            raise ValueError("exponent vector length must equal point length")
        total = Fraction(0)
        for j in range(pt.n):
            term = Fraction(1)
            for i, a in enumerate(w.exponents):
                term *= pt.coords[i][j] ** a
            total += term
        if w.kind == "AII":
            total *= 2
        return total
    if w.arity > pt.d:
        raise ValueError("word index out of range for point length")
    total = Fraction(0)
    for j in range(pt.n):
        term = Fraction(1)
        for ni, mi in w.pairs:
            term *= pt.coords[ni - 1][j] * pt.coords[mi - 1][j]
        total += term
    return total


def pfaffian_norm(x: RMatrix, p: PairDescriptor) -> Fraction:
    """N(x) = Pf(Jx): the polynomial square root of det on the odd part in
    the AII case, with sign fixed by the Pfaffian convention Pf(J) = 1."""
    if p.kind != "AII":
        raise ValueError("Pfaffian norm is defined for AII only")
    if not is_in_g1(p, x):
        raise ValueError("element is not in g1, Jx is not skew")
    return pfaffian(mat_mul(symplectic_form(p.n), x))


def eval_kron_det(inv: KroneckerDetInvariant, t: CommutingTuple) -> Fraction:
    """det of the rn x rn sum of Kronecker products T_i (x) Q_i."""
    p = t.pair
    if p.kind != "BDI" or p.n != p.m:
        raise ValueError("Kronecker determinant needs BDI with n = m")
    if inv.d != t.d:
        raise ValueError("coefficient count must equal tuple length")
    blocks = block_parts(t)
    total = RMatrix.zeros(inv.r * p.n)
    for ti, (q, _) in zip(inv.t_mats, blocks):
        total = total + kron(ti, q)
    return det(total)


def charpoly_word(w: TraceWord, t: CommutingTuple) -> RPoly:
    """Characteristic polynomial of x_1^{a_1}...x_d^{a_d} (AI/AII only)."""
    if w.kind not in EXPONENT_KINDS:
        raise ValueError("characteristic polynomial words take exponent form")
    return charpoly(word_product(w, t))


def enumerate_trace_words(kind: str, d: int, max_degree: int = DEFAULT_DEGREE_CAP,
                          max_word_length: int | None = None):
    """All canonical generator words for the case, in (degree, lex) order.

    Exponent words are all nonzero vectors with total degree at most
    max_degree.  Pair words are multisets of sorted index pairs; their
    length is capped by max_word_length, defaulting to max_degree // 2 so
    that the degree cap means the same thing in both shapes.  Reordering
    or swapping within a pair never changes the restriction value, so one
    representative per multiset suffices.
    """
    if kind in EXPONENT_KINDS:
        words = []

        def grow(prefix, remaining):
            if len(prefix) == d:
                if any(prefix):
                    words.append(TraceWord(kind, exponents=tuple(prefix)))
                return
            for a in range(remaining + 1):
                grow(prefix + [a], remaining - a)

        grow([], max_degree)
        words.sort(key=lambda w: (w.degree, w.exponents))
        return tuple(words)
    if kind not in PAIR_KINDS:
        raise ValueError(f"unknown case {kind!r}")
    cap = max_word_length if max_word_length is not None else max_degree // 2
    basic = [(a, b) for a in range(1, d + 1) for b in range(a, d + 1)]
    words = []

    def extend(prefix, start, length):
        if length == 0:
            if prefix:
                words.append(TraceWord(kind, pairs=tuple(prefix)))
            return
        for k in range(start, len(basic)):
            extend(prefix + [basic[k]], k, length - 1)

    for length in range(1, cap + 1):
        extend([], 0, length)
    words.sort(key=lambda w: (w.degree, w.pairs))
    return tuple(words)


def invariant_to_string(obj) -> str:
    """Canonical text form of a recipe; round-trips via invariant_from_string."""
    if isinstance(obj, TraceWord):
        if obj.exponents is not None:
            body = ",".join(str(a) for a in obj.exponents)
        else:
            body = ",".join(f"({a},{b})" for a, b in obj.pairs)
        return f"{obj.kind}:tr[{body}]"
    if isinstance(obj, KroneckerDetInvariant):
        mats = "|".join(
            ";".join(",".join(rat_str(e) for e in row) for row in t.to_lists())
            for t in obj.t_mats
        )
        return f"BDI:kron[{obj.r};{mats}]"
    raise TypeError("not an invariant recipe")


def _parse_pairs(body: str):
    pairs = []
    rest = body
    while rest:
        if not rest.startswith("("):
            raise ValueError("malformed pair list")
        close = rest.index(")")
        a, b = rest[1:close].split(",")
        pairs.append((int(a), int(b)))
        rest = rest[close + 1:]
        if rest.startswith(","):
            rest = rest[1:]
        elif rest:
            raise ValueError("malformed pair list")
    return tuple(pairs)


def invariant_from_string(s: str):
    """Parse the recipe grammar; inverse of invariant_to_string."""
    if ":" not in s or not s.endswith("]"):
        raise ValueError(f"malformed recipe {s!r}")
    kind, rest = s.split(":", 1)
    if rest.startswith("tr["):
        body = rest[3:-1]
        if body.startswith("("):
            return TraceWord(kind, pairs=_parse_pairs(body))
        if not body:
            if kind in EXPONENT_KINDS:
                return TraceWord(kind, exponents=(), allow_constant=True)
            return TraceWord(kind, pairs=(), allow_constant=True)
        exps = tuple(int(a) for a in body.split(","))
        constant = not any(exps)
        return TraceWord(kind, exponents=exps, allow_constant=constant)
    if rest.startswith("kron["):
        if kind != "BDI":
            raise ValueError("Kronecker recipes are BDI only")
        body = rest[5:-1]
        head, mats = body.split(";", 1)
        r = int(head)
        t_mats = tuple(
            RMatrix.from_rows([[Fraction(e) for e in row.split(",")]
                               for row in part.split(";")])
            for part in mats.split("|")
        )
        return KroneckerDetInvariant(r, t_mats)
    raise ValueError(f"malformed recipe {s!r}")
