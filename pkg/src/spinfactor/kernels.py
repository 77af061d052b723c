"""Sparse Laurent-polynomial convolution with a compiled fast path.

The backend is chosen at import time: the Cython extension when it can be
imported, otherwise the pure-Python loop.  Setting ``SPINFACTOR_PURE=1``
forces the pure path.  Inputs whose encoded keys or coefficients could
overflow int64 always take the pure path, so results never depend on the
backend.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

_INT64_LIMIT = 1 << 62

try:
    if os.environ.get("SPINFACTOR_PURE", "") not in ("", "0"):
        raise ImportError("pure backend requested")
    from . import _kernels as _compiled
    BACKEND = "compiled"
except ImportError:
    _compiled = None
    BACKEND = "python"


def _layout(a_keys, b_keys):
    cols_a = list(zip(*a_keys))
    cols_b = list(zip(*b_keys))
    lo_a = [min(c) for c in cols_a]
    lo_b = [min(c) for c in cols_b]
    radix = [max(ca) - la + max(cb) - lb + 1
             for ca, cb, la, lb in zip(cols_a, cols_b, lo_a, lo_b)]
    strides = []
    s = 1
    for r in radix:
        strides.append(s)
        s *= r
    return lo_a, lo_b, radix, strides, s


def _encode(keys, lo, strides):
    return [sum((x - l) * st for x, l, st in zip(k, lo, strides)) for k in keys]


def _decode_py(code: int, offset, radix):
    out = []
    for r, o in zip(radix, offset):
        code, digit = divmod(code, r)
        out.append(digit + o)
    return tuple(out)


def convolve(a: dict, b: dict, backend: str | None = None) -> dict:
    """Product of two sparse maps ``exponent tuple -> int``."""
    if not a or not b:
        return {}
    a_keys = list(a)
    b_keys = list(b)
    n = len(a_keys[0])
    if n == 0:
        v = a[()] * b[()]
        return {(): v} if v else {}
    if not all(isinstance(x, int) for k in a_keys for x in k) or \
            not all(isinstance(x, int) for k in b_keys for x in k):
        return _convolve_tuples(a, b)
    lo_a, lo_b, radix, strides, span = _layout(a_keys, b_keys)
    offset = [x + y for x, y in zip(lo_a, lo_b)]
    ak = _encode(a_keys, lo_a, strides)
    bk = _encode(b_keys, lo_b, strides)
    ac = list(a.values())
    bc = list(b.values())
    use = backend or BACKEND
    if use == "compiled" and _compiled is not None and span < _INT64_LIMIT:
        bound = max(map(abs, ac)) * max(map(abs, bc)) * min(len(ac), len(bc))
        if bound < _INT64_LIMIT:
            keys, coeffs = _compiled.convolve_int64(
                np.asarray(ak, dtype=np.int64), np.asarray(ac, dtype=np.int64),
                np.asarray(bk, dtype=np.int64), np.asarray(bc, dtype=np.int64))
            return _decode_arrays(keys, coeffs, radix, strides, offset)
    prod = _pykernels.convolve_encoded(ak, ac, bk, bc)
    return {_decode_py(k, offset, radix): v for k, v in prod.items()}


def _decode_arrays(keys, coeffs, radix, strides, offset) -> dict:
    if len(keys) == 0:
        return {}
    st = np.asarray(strides, dtype=np.int64)
    rd = np.asarray(radix, dtype=np.int64)
    digits = (keys[:, None] // st[None, :]) % rd[None, :] + np.asarray(offset, dtype=np.int64)
    return dict(zip(map(tuple, digits.tolist()), coeffs.tolist()))


def _convolve_tuples(a: dict, b: dict) -> dict:
    acc: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = tuple(x + y for x, y in zip(ka, kb))
            acc[k] = acc.get(k, 0) + ca * cb
    return {k: v for k, v in acc.items() if v}
