"""sympair: exact-arithmetic verification of restriction identities for
five classical symmetric pairs (AI, AII, AIII, BDI, CI)."""

__version__ = "0.1.0"
