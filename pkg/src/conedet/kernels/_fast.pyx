# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython implementations of the hot quadrature kernels.

Same contracts as conedet.kernels.reference; see that module's docstring.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, expm1, pow

cnp.import_array()


def product_density(object x, object y, object px, object py, object orders):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ya = np.ascontiguousarray(y, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pxa = np.ascontiguousarray(px, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pya = np.ascontiguousarray(py, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ba = np.ascontiguousarray(orders, dtype=np.float64)
    cdef Py_ssize_t n = xa.shape[0]
    cdef Py_ssize_t m = pxa.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i, j
    cdef double dx, dy, acc
    for i in range(n):
        acc = 1.0
        for j in range(m):
            dx = xa[i] - pxa[j]
            dy = ya[i] - pya[j]
            acc *= pow(dx * dx + dy * dy, ba[j])
        out[i] = acc
    return out


def j_bracket(object x, double a, double x0, object coeffs):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xa = np.ascontiguousarray(x, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ca = np.ascontiguousarray(coeffs, dtype=np.float64)
    cdef Py_ssize_t n = xa.shape[0]
    cdef Py_ssize_t nc = ca.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(n, dtype=np.float64)
    cdef Py_ssize_t i, k
    cdef double xi, x2, acc, d1, d2, coth, csch2
    cdef double const = (a + 1.0 / a) / 12.0
    for i in range(n):
        xi = xa[i]
        if xi <= x0:
            x2 = xi * xi
            acc = 0.0
            for k in range(nc - 1, -1, -1):
                acc = (acc + ca[k]) * x2
            out[i] = acc
        else:
            d1 = -expm1(-xi / a)
            coth = 1.0 + 2.0 * exp(-xi / a) / d1
            d2 = -expm1(-xi)
            csch2 = 4.0 * exp(-xi) / (d2 * d2)
            out[i] = coth / (2.0 * xi) - 0.25 * a * csch2 - const
    return out
