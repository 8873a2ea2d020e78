"""Backend selection for the coboundary scan kernels.

The compiled extension is used when available; set TWOGRP_PURE=1 to force
the pure-Python fallback (the benchmark and the backend-equivalence tests
rely on this).
"""

import os

import numpy as np

from . import _kernels_py

if os.environ.get("TWOGRP_PURE"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"


def _as_long(seq):
    return np.ascontiguousarray(seq, dtype=np.int64)


def coboundary_table(gtable, ng, degree, values, add, neg, na):
    out = np.zeros(ng ** (degree + 1), dtype=np.int64)
    if _impl is _kernels_py:
        _kernels_py.coboundary_table(
            list(gtable), ng, degree, list(values), list(add), list(neg), na, out
        )
        return out
    _impl.coboundary_table(
        _as_long(gtable), ng, degree, _as_long(values), _as_long(add),
        _as_long(neg), na, out,
    )
    return out


def first_coboundary_violation(gtable, ng, degree, values, add, neg, na):
    if _impl is _kernels_py:
        return _kernels_py.first_coboundary_violation(
            list(gtable), ng, degree, list(values), list(add), list(neg), na
        )
    return _impl.first_coboundary_violation(
        _as_long(gtable), ng, degree, _as_long(values), _as_long(add),
        _as_long(neg), na,
    )
