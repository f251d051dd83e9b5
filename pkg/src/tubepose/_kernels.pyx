# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cylinder-residual kernels.

Same contract as ``_kernels_py``: mean radial deviation of a cloud from a
cylinder of given radius whose axis passes through a fixed origin with
tilt angles (alpha, beta). ``deltas`` rows are (origin - point).
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, fabs, sin, sqrt

cnp.import_array()

BACKEND = "compiled"


cdef double _reduce(
    const double[:, ::1] deltas,
    const double[::1] sq_norms,
    double radius,
    double dx,
    double dy,
    double dz,
    bint squared,
) noexcept nogil:
    cdef Py_ssize_t j, n = deltas.shape[0]
    cdef double proj, val, dev, acc = 0.0
    for j in range(n):
        proj = deltas[j, 0] * dx + deltas[j, 1] * dy + deltas[j, 2] * dz
        val = sq_norms[j] - proj * proj
        if val < 0.0:
            val = 0.0
        dev = sqrt(val) - radius
        if squared:
            acc += dev * dev
        else:
            acc += fabs(dev)
    return acc / n


def residual_grid(deltas, sq_norms, double radius, alphas, betas, bint squared=False):
    """Mean radial deviation for every grid pair, shape (len(alphas), len(betas))."""
    cdef double[:, ::1] d_view = np.ascontiguousarray(deltas, dtype=np.float64)
    cdef double[::1] s_view = np.ascontiguousarray(sq_norms, dtype=np.float64)
    cdef double[::1] a_view = np.ascontiguousarray(np.atleast_1d(alphas), dtype=np.float64)
    cdef double[::1] b_view = np.ascontiguousarray(np.atleast_1d(betas), dtype=np.float64)
    cdef Py_ssize_t ia, ib, na = a_view.shape[0], nb = b_view.shape[0]
    cdef double ca, sa, cb, sb

    out = np.empty((na, nb))
    cdef double[:, ::1] o_view = out
    with nogil:
        for ia in range(na):
            ca = cos(a_view[ia])
            sa = sin(a_view[ia])
            for ib in range(nb):
                cb = cos(b_view[ib])
                sb = sin(b_view[ib])
                o_view[ia, ib] = _reduce(
                    d_view, s_view, radius, ca * sb, -sa, ca * cb, squared
                )
    return out


def residual_at(deltas, sq_norms, double radius, double alpha, double beta, bint squared=False):
    """Mean radial deviation for a single tilt pair."""
    cdef double[:, ::1] d_view = np.ascontiguousarray(deltas, dtype=np.float64)
    cdef double[::1] s_view = np.ascontiguousarray(sq_norms, dtype=np.float64)
    cdef double ca = cos(alpha), sa = sin(alpha)
    cdef double cb = cos(beta), sb = sin(beta)
    cdef double result
    with nogil:
        result = _reduce(d_view, s_view, radius, ca * sb, -sa, ca * cb, squared)
    return result
