"""Integer kernels behind series and cyclotomic matrix arithmetic.

The compiled module ``_ckernels`` is used when it was built and imports
cleanly; otherwise, or when ``WEILCORR_PURE_PYTHON`` is set, the pure-Python
module is used.  A compiled call that would overflow int64 transparently
reruns in pure Python, so both backends give identical exact results.
"""
import os

from . import _pykernels

_fast = None
if not os.environ.get("WEILCORR_PURE_PYTHON"):
    try:
        from . import _ckernels as _fast
    except ImportError:
        _fast = None

BACKEND = "cython" if _fast is not None else "python"


def mul_trunc(a, b, n):
    if _fast is not None:
        out = _fast.mul_trunc(a, b, n)
        if out is not None:
            return out
    return _pykernels.mul_trunc(a, b, n)


def div_trunc(a, b, n):
    if _fast is not None:
        out = _fast.div_trunc(a, b, n)
        if out is not None:
            return out
    return _pykernels.div_trunc(a, b, n)


def cyc_mulmod(a, b, phi):
    if _fast is not None:
        out = _fast.cyc_mulmod(a, b, phi)
        if out is not None:
            return out
    return _pykernels.cyc_mulmod(a, b, phi)


def cyc_matmul(A, B, n, phi):
    if _fast is not None:
        out = _fast.cyc_matmul(A, B, n, phi)
        if out is not None:
            return out
    return _pykernels.cyc_matmul(A, B, n, phi)


__all__ = ["BACKEND", "mul_trunc", "div_trunc", "cyc_mulmod", "cyc_matmul"]
