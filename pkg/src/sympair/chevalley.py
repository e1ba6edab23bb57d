"""Machine verification of the restriction identities.

Every check here compares two exactly computed rational values or
polynomials and records the outcome; nothing is approximated.  The central
identity states that evaluating a trace word on a conjugated Cartan tuple
recovers the closed-form symmetric function of the Cartan coordinates.
Characteristic polynomials factor accordingly, restricted values are
invariant under the little Weyl group, and at small degree the restricted
generators span the full graded invariant space, which is certified by an
exact evaluation-rank computation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exact.poly import RPoly, charpoly
from .invariants import (
    TraceWord,
    charpoly_word,
    enumerate_trace_words,
    eval_trace_word,
    restrict_trace_word,
    word_product,
)
from .pairs import (
    CartanPoint,
    PairDescriptor,
    WeylElement,
    random_cartan_point,
    sample_g0,
    weyl_act,
)
from .sampling import DEFAULT_BOUND, derive_seed
from .tuples import from_cartan

# Extra evaluation points beyond the target dimension before a rank
# deficit counts as a failure rather than under-sampling.
MARGIN = 4


@dataclass(frozen=True)
class IdentityCheck:
    """One exact comparison; passes iff the two values are equal."""
    pair: PairDescriptor
    d: int
    word: TraceWord
    seed: int | None
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class CharpolyCheck:
    """Polynomial comparison; for AII the left side must also be verified
    a perfect square by recomputing its square root."""
    pair: PairDescriptor
    d: int
    word: TraceWord
    seed: int
    lhs: RPoly
    rhs: RPoly
    square_root_ok: bool | None = None

    @property
    def passed(self) -> bool:
        if self.square_root_ok is False:
            return False
        return self.lhs == self.rhs


@dataclass(frozen=True)
class GradedDimReport:
    """Degree-by-degree comparison of the invariant-space dimension with
    the rank of restricted generator products evaluated at random points."""
    degree: int
    dim_invariants: int
    dim_spanned: int
    points: int
    status: str  # pass | fail | inconclusive

    @property
    def equal(self) -> bool:
        return self.dim_spanned == self.dim_invariants


def sample_inputs(p: PairDescriptor, d: int, seed: int,
                  bound: int = DEFAULT_BOUND):
    """Seeded Cartan point, group element, and provenance tuple."""
    pt = random_cartan_point(p, d, derive_seed(seed, "pt"), bound)
    g = sample_g0(p, derive_seed(seed, "g"), bound)
    return pt, g, from_cartan(p, pt, g)


def check_restriction_identity(p: PairDescriptor, d: int, w: TraceWord,
                               seed: int,
                               bound: int = DEFAULT_BOUND) -> IdentityCheck:
    """Word value on the seeded tuple versus the closed-form restriction."""
    pt, g, t = sample_inputs(p, d, seed, bound)
    return IdentityCheck(p, d, w, seed,
                         eval_trace_word(w, t), restrict_trace_word(w, pt))


def restriction_suite(p: PairDescriptor, d: int, seed: int, trials: int,
                      max_degree: int = 3, max_word_length: int = 2,
                      bound: int = DEFAULT_BOUND):
    """All capped words on one fresh tuple per trial."""
    words = enumerate_trace_words(p.kind, d, max_degree, max_word_length)
    out = []
    for k in range(trials):
        tseed = derive_seed(seed, "restriction", k)
        pt, g, t = sample_inputs(p, d, tseed, bound)
        for w in words:
            out.append(IdentityCheck(p, d, w, tseed,
                                     eval_trace_word(w, t),
                                     restrict_trace_word(w, pt)))
    return tuple(out)


def check_charpoly_factorization(p: PairDescriptor, d: int, exponents,
                                 seed: int,
                                 bound: int = DEFAULT_BOUND) -> CharpolyCheck:
    """det(tI - x_1^{a_1}...x_d^{a_d}) against the product over Cartan
    coordinates; squared for AII, where the square root is re-verified."""
    if p.kind not in ("AI", "AII"):
        raise ValueError("factorization check applies to AI and AII")
    exps = tuple(exponents)
    w = TraceWord(p.kind, exponents=exps, allow_constant=not any(exps))
    pt, g, t = sample_inputs(p, d, seed, bound)
    lhs = charpoly_word(w, t)
    roots = []
    for j in range(p.n):
        prod = Fraction(1)
        for i, a in enumerate(exps):
            prod *= pt.coords[i][j] ** a
        roots.append(prod)
    base = RPoly.from_roots(roots)
    if p.kind == "AI":
        return CharpolyCheck(p, d, w, seed, lhs, base)
    s = lhs.sqrt()
    ok = s is not None and s * s == lhs
    return CharpolyCheck(p, d, w, seed, lhs, base * base, square_root_ok=ok)


def check_block_charpoly(p: PairDescriptor, d: int, pairs, seed: int,
                         bound: int = DEFAULT_BOUND) -> CharpolyCheck:
    """Characteristic polynomial of the block-factor product against the
    product of coordinate monomials, for the antidiagonal-block cases."""
    if p.kind not in ("AIII", "BDI", "CI"):
        raise ValueError("block factorization applies to AIII, BDI, CI")
    w = TraceWord(p.kind, pairs=tuple(pairs))
    pt, g, t = sample_inputs(p, d, seed, bound)
    lhs = charpoly(word_product(w, t))
    roots = []
    for j in range(p.n):
        prod = Fraction(1)
        for ni, mi in w.pairs:
            prod *= pt.coords[ni - 1][j] * pt.coords[mi - 1][j]
        roots.append(prod)
    return CharpolyCheck(p, d, w, seed, lhs, RPoly.from_roots(roots))


def check_weyl_invariance(p: PairDescriptor, d: int, w: TraceWord,
                          weyl: WeylElement,
                          pt: CartanPoint) -> IdentityCheck:
    """Restriction value before and after the little-Weyl action."""
    if pt.d != d:
        raise ValueError("point length must equal d")
    moved = weyl_act(p, weyl, pt)
    return IdentityCheck(p, d, w, None,
                         restrict_trace_word(w, moved),
                         restrict_trace_word(w, pt))


def invariant_dim(p: PairDescriptor, d: int, delta: int) -> int:
    """Dimension of the degree-delta invariant subspace in the n*d Cartan
    coordinates.

    A monomial basis of invariants is indexed by multisets of at most n
    nonzero exponent vectors (one vector per active coordinate slot, slots
    being interchangeable).  When the little Weyl group carries sign flips,
    a slot survives averaging only when its total degree is even, so each
    vector degree must be even.
    """
    if delta == 0:
        return 1
    if d == 0:
        return 0
    step = 2 if p.signed_weyl else 1
    degrees = list(range(step, delta + 1, step))
    group_size = {k: comb(k + d - 1, d - 1) for k in degrees}

    def ways(idx: int, slots: int, deg: int) -> int:
        if deg == 0:
            return 1
        if idx == len(degrees):
            return 0
        k = degrees[idx]
        total = 0
        for s in range(0, min(slots, deg // k) + 1):
            if deg - k * s >= 0:
                total += comb(group_size[k] + s - 1, s) * \
                    ways(idx + 1, slots - s, deg - k * s)
        return total

    return ways(0, p.n, delta)


def _degree_products(words, delta: int):
    """Multisets of generator words with total degree exactly delta."""
    out = []

    def extend(prefix, start, remaining):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for k in range(start, len(words)):
            wdeg = words[k].degree
            if wdeg <= remaining:
                extend(prefix + [words[k]], k, remaining - wdeg)

    extend([], 0, delta)
    return out


def generation_check(p: PairDescriptor, d: int, delta_max: int,
                     samples: int | None = None, seed: int = 0,
                     margin: int = MARGIN,
                     bound: int = DEFAULT_BOUND):
    """Evaluation-rank surjectivity witness, one report per degree.

    For each degree the products of restricted generators are evaluated at
    random Cartan points and the exact rank of the value matrix is compared
    with the invariant dimension.  Equality certifies spanning at that
    degree.  A deficit with fewer points than dimension plus margin is
    reported inconclusive, since the rank may be under-measured.  For BDI
    the orbit count assumes the full signed action, which matches the
    little Weyl group when m > n with m odd.
    """
    from .exact import RMatrix, rank as matrix_rank

    words = enumerate_trace_words(p.kind, d, max_degree=delta_max)
    reports = []
    for delta in range(1, delta_max + 1):
        dim_inv = invariant_dim(p, d, delta)
        products = _degree_products(words, delta)
        npoints = samples if samples is not None else dim_inv + margin
        if not products or npoints == 0:
            rank_val = 0
        else:
            pts = [random_cartan_point(p, d, derive_seed(seed, "gen", delta, k),
                                       bound)
                   for k in range(npoints)]
            gen_vals = {
                w: [restrict_trace_word(w, pt) for pt in pts] for w in words
            }
            entries = []
            for prod in products:
                for col in range(npoints):
                    v = Fraction(1)
                    for w in prod:
                        v *= gen_vals[w][col]
                    entries.append(v)
            rank_val = matrix_rank(RMatrix(len(products), npoints, entries))
        if rank_val == dim_inv:
            status = "pass"
        elif npoints < dim_inv + margin:
            status = "inconclusive"
        else:
            status = "fail"
        reports.append(GradedDimReport(delta, dim_inv, rank_val,
                                       npoints, status))
    return tuple(reports)
