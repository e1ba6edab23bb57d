"""Points of the commuting scheme, with provenance back to the Cartan point
and group element that produced them."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact import RMatrix, commutator, det, inverse, mat_mul
from .pairs import CartanPoint, PairDescriptor, cartan_embed, is_in_g1


@dataclass(frozen=True)
class ValidationItem:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    items: tuple

    @property
    def all_pass(self) -> bool:
        return all(item.passed for item in self.items)

    @property
    def failures(self):
        return tuple(item for item in self.items if not item.passed)


@dataclass(frozen=True)
class CommutingTuple:
    """d ambient matrices expected to lie in g1 and pairwise commute.

    The container itself is permissive so that defective tuples can be
    built and inspected; from_cartan enforces all invariants loudly.
    """
    pair: PairDescriptor
    mats: tuple
    provenance: tuple | None = None  # (CartanPoint, g)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "mats", tuple(self.mats))
        nn = self.pair.ambient_dim
        for x in self.mats:
            if x.rows != nn or x.cols != nn:
                raise ValueError("tuple member has wrong ambient size")

    @property
    def d(self) -> int:
        return len(self.mats)


def from_cartan(p: PairDescriptor, pt: CartanPoint, g: RMatrix) -> CommutingTuple:
    """Conjugate the embedded Cartan tuple by g; fails loudly if any
    commuting-scheme invariant does not hold exactly."""
    mats = cartan_embed(p, pt)
    if det(g) == 0:
        raise ValueError("conjugating element is singular")
    ginv = inverse(g)
    conj = tuple(mat_mul(mat_mul(g, x), ginv) for x in mats)
    t = CommutingTuple(p, conj, provenance=(pt, g))
    report = validate(t)
    if not report.all_pass:
        names = ", ".join(item.name for item in report.failures)
        raise ValueError(f"commuting tuple construction failed: {names}")
    return t


def validate(t: CommutingTuple) -> ValidationReport:
    """Check every invariant and report pass/fail per item."""
    items = []
    for i, x in enumerate(t.mats):
        ok = is_in_g1(t.pair, x)
        items.append(ValidationItem(f"mats[{i}] in g1", ok))
    for i in range(t.d):
        for j in range(i + 1, t.d):
            ok = commutator(t.mats[i], t.mats[j]).is_zero()
            items.append(ValidationItem(f"[mats[{i}], mats[{j}]] = 0", ok))
    if t.provenance is not None:
        pt, g = t.provenance
        if det(g) == 0:
            items.append(ValidationItem("provenance g invertible", False))
        else:
            items.append(ValidationItem("provenance g invertible", True))
            embedded = cartan_embed(t.pair, pt)
            if len(embedded) != t.d:
                items.append(ValidationItem("provenance arity", False,
                                            "Cartan point d differs"))
            else:
                ginv = inverse(g)
                for i, x in enumerate(embedded):
                    ok = mat_mul(mat_mul(g, x), ginv) == t.mats[i]
                    items.append(
                        ValidationItem(f"provenance reproduces mats[{i}]", ok)
                    )
    return ValidationReport(tuple(items))


def conjugate(t: CommutingTuple, g: RMatrix) -> CommutingTuple:
    """Fresh tuple g t g^{-1}; provenance is carried along (composed)."""
    ginv = inverse(g)
    mats = tuple(mat_mul(mat_mul(g, x), ginv) for x in t.mats)
    prov = None
    if t.provenance is not None:
        pt, g0 = t.provenance
        prov = (pt, mat_mul(g, g0))
    return CommutingTuple(t.pair, mats, provenance=prov)


def block_parts(t: CommutingTuple):
    """The (Q_i, R_i) antidiagonal blocks for AIII/BDI/CI tuples."""
    p = t.pair
    if p.kind not in ("AIII", "BDI", "CI"):
        raise ValueError(f"block_parts undefined for {p.kind}")
    key = "blocks"
    if key not in t._cache:
        n = p.n
        m = p.m if p.kind in ("AIII", "BDI") else n
        parts = tuple(
            (x.submatrix(0, n, n, n + m), x.submatrix(n, n + m, 0, n))
            for x in t.mats
        )
        t._cache[key] = parts
    return t._cache[key]
