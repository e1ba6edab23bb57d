"""Trace-word evaluation, restriction formulas, Pfaffian norm, Kronecker
determinant invariants, and the recipe text grammar."""
from fractions import Fraction

import pytest

from sympair.exact import RMatrix, det, mat_mul
from sympair.exact.poly import RPoly
from sympair.invariants import (
    DEFAULT_DEGREE_CAP,
    KroneckerDetInvariant,
    TraceWord,
    charpoly_word,
    enumerate_trace_words,
    eval_kron_det,
    eval_trace_word,
    invariant_from_string,
    invariant_to_string,
    pfaffian_norm,
    rat_str,
    restrict_trace_word,
)
from sympair.pairs import (
    CartanPoint,
    PairDescriptor,
    cartan_embed,
    random_cartan_point,
    sample_g0,
    theta,
)
from sympair.sampling import derive_seed, make_rng, rand_matrix
from sympair.tuples import CommutingTuple, conjugate, from_cartan


def worked_tuple():
    """AI n=2 d=2 tuple with provenance pt=[[1,2],[3,4]], g=[[0,-1],[1,0]]."""
    p = PairDescriptor("AI", 2)
    pt = CartanPoint([[1, 2], [3, 4]])
    g = RMatrix.from_rows([[0, -1], [1, 0]])
    return p, pt, from_cartan(p, pt, g)


def embedded_tuple(p, pt):
    return CommutingTuple(p, cartan_embed(p, pt), provenance=None)


def test_traceword_validation():
    TraceWord("AI", exponents=(1, 0))
    TraceWord("CI", pairs=((1, 2),))
    with pytest.raises(ValueError):
        TraceWord("AI", exponents=(0, 0))
    with pytest.raises(ValueError):
        TraceWord("CI", pairs=())
    with pytest.raises(ValueError):
        TraceWord("AI", exponents=(-1,))
    with pytest.raises(ValueError):
        TraceWord("CI", pairs=((0, 1),))
    with pytest.raises(ValueError):
        TraceWord("AI", pairs=((1, 1),))
    with pytest.raises(ValueError):
        TraceWord("CI", exponents=(1,))
    with pytest.raises(ValueError):
        TraceWord("XX", exponents=(1,))
    w = TraceWord("AI", exponents=(0, 0), allow_constant=True)
    assert w.degree == 0


def test_traceword_degree_arity():
    assert TraceWord("AI", exponents=(1, 0, 2)).degree == 3
    assert TraceWord("AI", exponents=(1, 0, 2)).arity == 3
    assert TraceWord("BDI", pairs=((1, 1), (1, 2))).degree == 4
    assert TraceWord("BDI", pairs=((1, 3),)).arity == 3


def test_eval_trace_of_first_power_is_diagonal_sum():
    p = PairDescriptor("AI", 3)
    pt = CartanPoint([[1, 2, 3], [4, 5, 6]])
    t = embedded_tuple(p, pt)
    w = TraceWord("AI", exponents=(1, 0))
    assert eval_trace_word(w, t) == 1 + 2 + 3


def test_eval_worked_example_value_11():
    p, pt, t = worked_tuple()
    assert t.mats[0] == RMatrix.diag([2, 1])
    assert t.mats[1] == RMatrix.diag([4, 3])
    w = TraceWord("AI", exponents=(1, 1))
    # oracle: Tr(diag(2,1) diag(4,3)) = 2*4 + 1*3
    assert eval_trace_word(w, t) == 11


def test_eval_aii_doubles_eigenvalue():
    p = PairDescriptor("AII", 1)
    b = Fraction(7, 3)
    t = CommutingTuple(p, (RMatrix.diag([b, b]),))
    assert eval_trace_word(TraceWord("AII", exponents=(1,)), t) == 2 * b


def test_eval_checks_case_and_bounds():
    p, pt, t = worked_tuple()
    with pytest.raises(ValueError):
        eval_trace_word(TraceWord("AII", exponents=(1, 1)), t)
    with pytest.raises(ValueError):
        eval_trace_word(TraceWord("AI", exponents=(1,)), t)
    ci = PairDescriptor("CI", 1)
    tc = embedded_tuple(ci, CartanPoint([[2]]))
    with pytest.raises(ValueError):
        eval_trace_word(TraceWord("CI", pairs=((1, 2),)), tc)


def test_restrict_worked_example():
    pt = CartanPoint([[1, 2], [3, 4]])
    w = TraceWord("AI", exponents=(1, 1))
    assert restrict_trace_word(w, pt) == 1 * 3 + 2 * 4


def test_restrict_aii_factor_two():
    b = Fraction(5, 2)
    pt = CartanPoint([[b]])
    assert restrict_trace_word(TraceWord("AII", exponents=(1,)), pt) == 2 * b


def test_restrict_zero_point_vanishes():
    for kind, w in [
        ("AI", TraceWord("AI", exponents=(2, 1))),
        ("AII", TraceWord("AII", exponents=(1, 0))),
        ("AIII", TraceWord("AIII", pairs=((1, 2),))),
        ("BDI", TraceWord("BDI", pairs=((2, 2),))),
        ("CI", TraceWord("CI", pairs=((1, 1), (1, 2)))),
    ]:
        pt = CartanPoint([[0, 0, 0], [0, 0, 0]])
        assert restrict_trace_word(w, pt) == 0


def test_restrict_dimension_mismatch():
    pt = CartanPoint([[1, 2]])
    with pytest.raises(ValueError):
        restrict_trace_word(TraceWord("AI", exponents=(1, 1)), pt)
    with pytest.raises(ValueError):
        restrict_trace_word(TraceWord("CI", pairs=((1, 2),)), pt)


def embedded_eval_cases():
    return [
        (PairDescriptor("AI", 3), TraceWord("AI", exponents=(2, 1))),
        (PairDescriptor("AII", 2), TraceWord("AII", exponents=(1, 2))),
        (PairDescriptor("AIII", 2, 4), TraceWord("AIII", pairs=((1, 2), (2, 2)))),
        (PairDescriptor("BDI", 2, 3), TraceWord("BDI", pairs=((1, 2),))),
        (PairDescriptor("CI", 3), TraceWord("CI", pairs=((1, 1), (1, 2)))),
    ]


def test_eval_on_embedded_cartan_matches_restriction():
    """With g absent the word value is the printed symmetric function."""
    for p, w in embedded_eval_cases():
        for trial in range(5):
            pt = random_cartan_point(p, 2, derive_seed(400, p.kind, trial))
            t = embedded_tuple(p, pt)
            assert eval_trace_word(w, t) == restrict_trace_word(w, pt)


def test_eval_invariant_under_group_action():
    for p, w in embedded_eval_cases():
        for trial in range(3):
            seed = derive_seed(410, p.kind, trial)
            pt = random_cartan_point(p, 2, derive_seed(seed, "pt"))
            g = sample_g0(p, derive_seed(seed, "g"))
            t = from_cartan(p, pt, g)
            h = sample_g0(p, derive_seed(seed, "h"))
            assert eval_trace_word(w, t) == eval_trace_word(w, conjugate(t, h))


def rand_g1_aii(p, seed):
    rng = make_rng(seed)
    y = rand_matrix(rng, p.ambient_dim)
    return (y - theta(p, y)) * Fraction(1, 2)


def test_pfaffian_norm_examples():
    p = PairDescriptor("AII", 1)
    b = Fraction(9, 4)
    assert pfaffian_norm(RMatrix.diag([b, b]), p) == b
    assert pfaffian_norm(RMatrix.zeros(2), p) == 0


def test_pfaffian_norm_on_cartan_is_coordinate_product():
    p = PairDescriptor("AII", 3)
    pt = CartanPoint([[2, Fraction(1, 3), -5]])
    x = cartan_embed(p, pt)[0]
    nu = pfaffian_norm(x, p)
    assert nu == 2 * Fraction(1, 3) * -5
    assert nu * nu == det(x)


def test_pfaffian_norm_rejects():
    p = PairDescriptor("AII", 1)
    with pytest.raises(ValueError):
        pfaffian_norm(RMatrix.diag([1, 2]), p)
    with pytest.raises(ValueError):
        pfaffian_norm(RMatrix.identity(2), PairDescriptor("AI", 2))


def test_pfaffian_norm_squares_to_det():
    count = 0
    for n in (1, 2, 3):
        p = PairDescriptor("AII", n)
        for trial in range(70):
            x = rand_g1_aii(p, derive_seed(420, n, trial))
            assert pfaffian_norm(x, p) ** 2 == det(x)
            count += 1
    assert count >= 200


def test_pfaffian_norm_multiplicative_sign_constant():
    """det(xy) = det(x)det(y) exactly; the norm sign ratio is constant."""
    signs = set()
    for n in (1, 2, 3):
        p = PairDescriptor("AII", n)
        for trial in range(10):
            seed = derive_seed(430, n, trial)
            pt = random_cartan_point(p, 2, derive_seed(seed, "pt"))
            g = sample_g0(p, derive_seed(seed, "g"))
            t = from_cartan(p, pt, g)
            x, y = t.mats
            assert det(mat_mul(x, y)) == det(x) * det(y)
            nx, ny = pfaffian_norm(x, p), pfaffian_norm(y, p)
            if nx * ny != 0:
                signs.add(pfaffian_norm(mat_mul(x, y), p) / (nx * ny))
    assert len(signs) == 1
    assert abs(next(iter(signs))) == 1


def test_kron_invariant_validation():
    with pytest.raises(ValueError):
        KroneckerDetInvariant(0, (RMatrix.identity(1),))
    with pytest.raises(ValueError):
        KroneckerDetInvariant(2, (RMatrix.zeros(2, 3),))
    with pytest.raises(ValueError):
        KroneckerDetInvariant(1, ())


def bdi_square_tuple(seed, d=2):
    p = PairDescriptor("BDI", 2, 2)
    pt = random_cartan_point(p, d, derive_seed(seed, "pt"))
    g = sample_g0(p, derive_seed(seed, "g"))
    return p, from_cartan(p, pt, g)


def test_kron_det_scalar_coefficient_is_block_det():
    p, t = bdi_square_tuple(440)
    inv = KroneckerDetInvariant(1, (RMatrix.identity(1), RMatrix.zeros(1)))
    q0 = t.mats[0].submatrix(0, 2, 2, 4)
    assert eval_kron_det(inv, t) == det(q0)


def test_kron_det_zero_coefficients():
    p, t = bdi_square_tuple(441)
    inv = KroneckerDetInvariant(2, (RMatrix.zeros(2), RMatrix.zeros(2)))
    assert eval_kron_det(inv, t) == 0


def test_kron_det_cartan_diagonal_product():
    p = PairDescriptor("BDI", 3, 3)
    coords = [Fraction(2), Fraction(-1, 2), Fraction(4)]
    pt = CartanPoint([coords])
    t = embedded_tuple(p, pt)
    inv = KroneckerDetInvariant(1, (RMatrix.identity(1),))
    # oracle: product of the diagonal entries of the embedded block
    assert eval_kron_det(inv, t) == coords[0] * coords[1] * coords[2]


def test_kron_det_rejects_mismatches():
    p, t = bdi_square_tuple(442)
    with pytest.raises(ValueError):
        eval_kron_det(KroneckerDetInvariant(1, (RMatrix.identity(1),)), t)
    rect = PairDescriptor("BDI", 2, 3)
    pt = random_cartan_point(rect, 1, 1)
    trect = embedded_tuple(rect, pt)
    inv = KroneckerDetInvariant(1, (RMatrix.identity(1),))
    with pytest.raises(ValueError):
        eval_kron_det(inv, trect)
    ai = embedded_tuple(PairDescriptor("AI", 2), CartanPoint([[1, 2]]))
    with pytest.raises(ValueError):
        eval_kron_det(inv, ai)


def test_kron_det_so_by_so_invariance():
    for trial in range(8):
        seed = derive_seed(450, trial)
        p, t = bdi_square_tuple(seed)
        rng = make_rng(derive_seed(seed, "coeff"))
        r = 1 + trial % 2
        inv = KroneckerDetInvariant(
            r, tuple(rand_matrix(rng, r) for _ in range(t.d)))
        h = sample_g0(p, derive_seed(seed, "h"))
        assert eval_kron_det(inv, t) == eval_kron_det(inv, conjugate(t, h))


def test_charpoly_word_identity_matrix():
    p, pt, t = worked_tuple()
    w = TraceWord("AI", exponents=(0, 0), allow_constant=True)
    assert charpoly_word(w, t) == RPoly.from_roots([1, 1])


def test_charpoly_word_worked_example():
    p, pt, t = worked_tuple()
    w = TraceWord("AI", exponents=(1, 1))
    # oracle: product is diag(8, 3), so (t-8)(t-3) = t^2 - 11 t + 24
    assert charpoly_word(w, t) == RPoly([24, -11, 1])


def test_charpoly_word_aii_double_root():
    p = PairDescriptor("AII", 1)
    b = Fraction(3, 2)
    t = CommutingTuple(p, (RMatrix.diag([b, b]),))
    w = TraceWord("AII", exponents=(1,))
    assert charpoly_word(w, t) == RPoly.from_roots([b, b])


def test_charpoly_word_rejects_pair_form():
    ci = PairDescriptor("CI", 1)
    t = embedded_tuple(ci, CartanPoint([[2]]))
    with pytest.raises(ValueError):
        charpoly_word(TraceWord("CI", pairs=((1, 1),)), t)


def test_enumerate_exponent_words():
    words = enumerate_trace_words("AI", 2, max_degree=2)
    vecs = [w.exponents for w in words]
    assert vecs == [(0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert all(1 <= w.degree <= 2 for w in words)


def test_enumerate_pair_words():
    words = enumerate_trace_words("CI", 2, max_degree=4)
    assert len(words) == 9
    assert all(w.degree in (2, 4) for w in words)
    for w in words:
        assert all(a <= b for a, b in w.pairs)
        assert tuple(sorted(w.pairs)) == w.pairs
    short = enumerate_trace_words("CI", 2, max_degree=4, max_word_length=1)
    assert len(short) == 3


def test_enumerate_default_cap():
    words = enumerate_trace_words("AI", 1)
    assert [w.exponents for w in words] == [(k,) for k in range(1, DEFAULT_DEGREE_CAP + 1)]


def test_rat_str_canonical():
    assert rat_str(Fraction(11)) == "11/1"
    assert rat_str(Fraction(-3, 6)) == "-1/2"


def test_recipe_round_trip():
    cases = [
        TraceWord("AI", exponents=(1, 0, 2)),
        TraceWord("AII", exponents=(4,)),
        TraceWord("CI", pairs=((1, 1), (1, 2))),
        TraceWord("BDI", pairs=((2, 3),)),
        TraceWord("AI", exponents=(0, 0), allow_constant=True),
        KroneckerDetInvariant(2, (
            RMatrix.from_rows([[1, Fraction(1, 2)], [0, 3]]),
            RMatrix.zeros(2),
        )),
    ]
    for obj in cases:
        s = invariant_to_string(obj)
        assert invariant_from_string(s) == obj
        assert invariant_to_string(invariant_from_string(s)) == s


def test_recipe_exact_strings():
    assert invariant_to_string(TraceWord("AI", exponents=(1, 0, 2))) == "AI:tr[1,0,2]"
    w = TraceWord("CI", pairs=((1, 1), (1, 2)))
    assert invariant_to_string(w) == "CI:tr[(1,1),(1,2)]"
    inv = KroneckerDetInvariant(1, (RMatrix.from_rows([[Fraction(1, 2)]]),))
    assert invariant_to_string(inv) == "BDI:kron[1;1/2]"


def test_recipe_rejects_malformed():
    for s in ["AI", "AI:tr[1", "AI:zz[1]", "XX:tr[1]", "CI:tr[(1,2]",
              "AI:kron[1;1/1]", "BDI:kron[oops;1/1]"]:
        with pytest.raises((ValueError, TypeError)):
            invariant_from_string(s)


def test_word_cache_reuse_is_consistent():
    p, pt, t = worked_tuple()
    w1 = TraceWord("AI", exponents=(2, 1))
    first = eval_trace_word(w1, t)
    second = eval_trace_word(w1, t)
    assert first == second
    x = t.mats[0]
    expect = mat_mul(mat_mul(x, x), t.mats[1]).trace()
    assert first == expect


def test_pair_word_cache_transpose_case():
    p = PairDescriptor("BDI", 2, 3)
    rng = make_rng(460)
    pt = random_cartan_point(p, 2, derive_seed(460, "pt"))
    g = sample_g0(p, derive_seed(460, "g"))
    t = from_cartan(p, pt, g)
    w = TraceWord("BDI", pairs=((1, 2), (1, 1)))
    v = eval_trace_word(w, t)
    q1 = t.mats[0].submatrix(0, 2, 2, 5)
    q2 = t.mats[1].submatrix(0, 2, 2, 5)
    direct = mat_mul(mat_mul(q1, q2.transpose()),
                     mat_mul(q1, q1.transpose())).trace()
    assert v == direct
    assert v == restrict_trace_word(w, pt)
