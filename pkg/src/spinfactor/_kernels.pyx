# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled sparse convolution over int64-encoded exponent vectors."""

from libcpp.unordered_map cimport unordered_map

import numpy as np


def convolve_int64(const long long[::1] ak, const long long[::1] ac,
                   const long long[::1] bk, const long long[::1] bc):
    """Return (keys, coeffs) of the product, zero coefficients dropped.

    The caller guarantees that neither key sums nor accumulated
    coefficients can overflow int64.
    """
    cdef unordered_map[long long, long long] acc
    cdef Py_ssize_t i, j
    cdef Py_ssize_t na = ak.shape[0]
    cdef Py_ssize_t nb = bk.shape[0]
    cdef long long ka, ca
    cdef Py_ssize_t count = 0
    acc.reserve(na + nb)
    with nogil:
        for i in range(na):
            ka = ak[i]
            ca = ac[i]
            for j in range(nb):
                acc[ka + bk[j]] += ca * bc[j]
        for kv in acc:
            if kv.second != 0:
                count += 1
    keys = np.empty(count, dtype=np.int64)
    coeffs = np.empty(count, dtype=np.int64)
    cdef long long[::1] kout = keys
    cdef long long[::1] cout = coeffs
    cdef Py_ssize_t pos = 0
    with nogil:
        for kv in acc:
            if kv.second != 0:
                kout[pos] = kv.first
                cout[pos] = kv.second
                pos += 1
    return keys, coeffs
