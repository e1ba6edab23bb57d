"""Deterministic seeded sampling of exact rational data.

Seed discipline: every randomized routine takes one integer master seed and
derives per-purpose child seeds with derive_seed, so a fixed master seed
reproduces every sample bit-for-bit regardless of evaluation order.
Rational entries are drawn uniformly from {-B..B}/{1..B} (default B = 5).
"""
from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .exact import RMatrix

DEFAULT_BOUND = 5


def derive_seed(seed: int, *tags) -> int:
    """Stable 64-bit child seed from a master seed and hashable tags."""
    h = hashlib.sha256(repr(("sympair", seed) + tags).encode()).digest()
    return int.from_bytes(h[:8], "big")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def rand_rational(rng: random.Random, bound: int = DEFAULT_BOUND) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def rand_matrix(rng: random.Random, rows: int, cols: int | None = None,
                bound: int = DEFAULT_BOUND) -> RMatrix:
    cols = rows if cols is None else cols
    return RMatrix(rows, cols,
                   [rand_rational(rng, bound) for _ in range(rows * cols)])


def rand_skew(rng: random.Random, n: int, bound: int = DEFAULT_BOUND) -> RMatrix:
    e = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rand_rational(rng, bound)
            e[i][j] = v
            e[j][i] = -v
    return RMatrix.from_rows(e)


def rand_symmetric(rng: random.Random, n: int, bound: int = DEFAULT_BOUND) -> RMatrix:
    e = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        e[i][i] = rand_rational(rng, bound)
        for j in range(i + 1, n):
            v = rand_rational(rng, bound)
            e[i][j] = v
            e[j][i] = v
    return RMatrix.from_rows(e)
