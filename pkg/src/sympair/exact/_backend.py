"""Kernel backend selection.

The compiled kernels are preferred when importable; SYMPAIR_PURE=1 in the
environment forces the pure-Python fallback.  Both backends expose the same
five functions with identical exact semantics.
"""
import os

if os.environ.get("SYMPAIR_PURE"):
    from . import _purekernels as kernels
else:
    try:
        from . import _ckernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _purekernels as kernels

BACKEND = kernels.BACKEND_NAME
imatmul = kernels.imatmul
idet = kernels.idet
irank = kernels.irank
icharpoly = kernels.icharpoly
ipfaffian = kernels.ipfaffian
