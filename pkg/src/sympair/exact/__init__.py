"""Exact rational linear algebra: matrices, elimination kernels, charpoly."""
from ._backend import BACKEND
from .matrix import (
    Rational,
    RMatrix,
    commutator,
    det,
    inverse,
    kron,
    mat_mul,
    mat_pow,
    pfaffian,
    rank,
)
from .poly import RPoly, charpoly

__all__ = [
    "BACKEND",
    "Rational",
    "RMatrix",
    "RPoly",
    "charpoly",
    "commutator",
    "det",
    "inverse",
    "kron",
    "mat_mul",
    "mat_pow",
    "pfaffian",
    "rank",
]
