"""Pure-Python kernels; used when the compiled extension is unavailable."""

from __future__ import annotations


def convolve_encoded(ak, ac, bk, bc) -> dict[int, int]:
    """Sparse product of two encoded Laurent polynomials.

    Keys are mixed-radix integers, so adding keys adds exponent vectors.
    Zero coefficients are dropped from the result.
    """
    acc: dict[int, int] = {}
    get = acc.get
    pairs_b = list(zip(bk, bc))
    for ka, ca in zip(ak, ac):
        for kb, cb in pairs_b:
            k = ka + kb
            acc[k] = get(k, 0) + ca * cb
    return {k: v for k, v in acc.items() if v}
