import pytest

from sympair.exact import RMatrix, inverse, mat_mul
from sympair.pairs import (
    CartanPoint,
    PairDescriptor,
    cartan_embed,
    random_cartan_point,
    sample_g0,
)
from sympair.sampling import derive_seed
from sympair.tuples import (
    CommutingTuple,
    block_parts,
    conjugate,
    from_cartan,
    validate,
)


def test_from_cartan_with_identity_g():
    p = PairDescriptor("AI", 3)
    pt = random_cartan_point(p, 2, seed=1)
    t = from_cartan(p, pt, RMatrix.identity(3))
    assert list(t.mats) == cartan_embed(p, pt)
    assert t.provenance[0] == pt


def test_from_cartan_hand_example():
    p = PairDescriptor("AI", 2)
    pt = CartanPoint([[1, 2], [3, 4]])
    g = RMatrix.from_rows([[0, -1], [1, 0]])
    t = from_cartan(p, pt, g)
    assert t.mats[0] == RMatrix.diag([2, 1])
    assert t.mats[1] == RMatrix.diag([4, 3])


def test_from_cartan_zero_point():
    p = PairDescriptor("CI", 2)
    pt = CartanPoint([[0, 0], [0, 0], [0, 0]])
    t = from_cartan(p, pt, sample_g0(p, 5))
    assert all(x.is_zero() for x in t.mats)


def test_from_cartan_singular_g():
    p = PairDescriptor("AI", 2)
    with pytest.raises(ValueError):
        from_cartan(p, CartanPoint([[1, 2]]), RMatrix.zeros(2))


def test_validate_all_pass_for_sampled_tuples():
    p = PairDescriptor("AIII", 2, 3)
    pt = random_cartan_point(p, 3, seed=2)
    t = from_cartan(p, pt, sample_g0(p, 3))
    report = validate(t)
    assert report.all_pass
    assert report.failures == ()
    # items cover membership, commutation, and provenance
    names = [item.name for item in report.items]
    assert "mats[0] in g1" in names
    assert "[mats[0], mats[1]] = 0" in names
    assert "provenance reproduces mats[2]" in names


def test_validate_flags_noncommuting_pair():
    # diag(1,2) and [[0,1],[1,0]] are both symmetric but do not commute
    p = PairDescriptor("AI", 2)
    t = CommutingTuple(p, (RMatrix.diag([1, 2]),
                           RMatrix.from_rows([[0, 1], [1, 0]])))
    report = validate(t)
    assert not report.all_pass
    assert [item.name for item in report.failures] == ["[mats[0], mats[1]] = 0"]


def test_validate_flags_non_g1_member():
    p = PairDescriptor("AI", 2)
    t = CommutingTuple(p, (RMatrix.from_rows([[0, 1], [-1, 0]]),))
    report = validate(t)
    assert [item.name for item in report.failures] == ["mats[0] in g1"]


def test_validate_empty_tuple_vacuous():
    p = PairDescriptor("BDI", 2, 3)
    t = CommutingTuple(p, ())
    assert validate(t).all_pass
    assert t.d == 0


def test_from_cartan_empty_point():
    p = PairDescriptor("AII", 2)
    t = from_cartan(p, CartanPoint([]), sample_g0(p, 8))
    assert t.d == 0
    assert validate(t).all_pass


def test_provenance_round_trip():
    for p in [PairDescriptor("AII", 2), PairDescriptor("BDI", 2, 3)]:
        pt = random_cartan_point(p, 2, seed=11)
        g = sample_g0(p, 12)
        t = from_cartan(p, pt, g)
        ginv = inverse(g)
        for x, y in zip(t.mats, cartan_embed(p, pt)):
            assert mat_mul(mat_mul(ginv, x), g) == y


def test_wrong_ambient_size_rejected():
    p = PairDescriptor("AI", 3)
    with pytest.raises(ValueError):
        CommutingTuple(p, (RMatrix.zeros(2),))


GRID = [
    ("AI", [1, 2, 3, 4, 5], None),
    ("AII", [1, 2, 3], None),
    ("AIII", [1, 2, 3], lambda n: n + 1),
    ("BDI", [1, 2, 3], lambda n: n + 3),
    ("CI", [1, 2, 3], None),
]


def test_from_cartan_validate_grid():
    # >= 100 seeded trials across the grid of cases, n <= 5 (m <= 6), d <= 4
    trials = 0
    for kind, ns, mk in GRID:
        for n in ns:
            m = mk(n) if mk else None
            p = PairDescriptor(kind, n, m)
            for d in (0, 1, 2, 4):
                for rep in (0, 1):
                    seed = derive_seed(9000, kind, n, d, rep)
                    pt = random_cartan_point(p, d, seed)
                    t = from_cartan(p, pt, sample_g0(p, derive_seed(seed, "g")))
                    assert validate(t).all_pass
                    trials += 1
    assert trials >= 100


def test_conjugate_composes_provenance():
    p = PairDescriptor("CI", 2)
    pt = random_cartan_point(p, 2, seed=21)
    t = from_cartan(p, pt, sample_g0(p, 22))
    g = sample_g0(p, 23)
    t2 = conjugate(t, g)
    assert validate(t2).all_pass
    assert t2.provenance[0] == pt


# ------------------------------------------------------------ block_parts

def test_block_parts_ci_example():
    p = PairDescriptor("CI", 1)
    t = from_cartan(p, CartanPoint([[7]]), RMatrix.identity(2))
    ((q, r),) = block_parts(t)
    assert q == RMatrix.from_rows([[7]])
    assert r == RMatrix.from_rows([[7]])


def test_block_parts_bdi_cartan_slice():
    p = PairDescriptor("BDI", 2, 4)
    t = from_cartan(p, CartanPoint([[3, 5]]), RMatrix.identity(6))
    ((q, r),) = block_parts(t)
    assert q == RMatrix.from_rows([[3, 0, 0, 0], [0, 5, 0, 0]])
    assert r == -q.transpose()


def test_block_parts_aiii_zero_tuple():
    p = PairDescriptor("AIII", 2, 2)
    t = from_cartan(p, CartanPoint([[0, 0]]), sample_g0(p, 31))
    ((q, r),) = block_parts(t)
    assert q.is_zero() and r.is_zero()
    assert q.rows == 2 and q.cols == 2


def test_block_parts_wrong_case():
    p = PairDescriptor("AI", 2)
    t = CommutingTuple(p, (RMatrix.diag([1, 2]),))
    with pytest.raises(ValueError):
        block_parts(t)


def test_block_parts_shapes_rectangular():
    p = PairDescriptor("AIII", 2, 5)
    pt = random_cartan_point(p, 2, seed=41)
    t = from_cartan(p, pt, sample_g0(p, 42))
    for q, r in block_parts(t):
        assert (q.rows, q.cols) == (2, 5)
        assert (r.rows, r.cols) == (5, 2)
