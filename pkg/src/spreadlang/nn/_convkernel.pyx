# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution kernels (hot inner loops of training and attribution).

Mirrors the semantics of ``_kernels_py`` exactly; see that module for the
contract. Selected automatically at import by ``spreadlang.nn.kernels``.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def conv_forward(double[:, ::1] emb, double[:, ::1] filters, double[::1] bias, int width):
    cdef Py_ssize_t length = emb.shape[0]
    cdef Py_ssize_t dim = emb.shape[1]
    cdef Py_ssize_t nfilt = filters.shape[0]
    cdef Py_ssize_t npos = length - width + 1
    if npos < 1:
        npos = 1

    pooled_arr = np.zeros(nfilt, dtype=np.float64)
    argmax_arr = np.zeros(nfilt, dtype=np.int64)
    cdef double[::1] pooled = pooled_arr
    cdef cnp.int64_t[::1] argmax = argmax_arr

    cdef Py_ssize_t k, t, r, c, rows
    cdef double acc, best
    cdef Py_ssize_t best_t

    for k in range(nfilt):
        best = 0.0
        best_t = 0
        for t in range(npos):
            rows = width
            if t + rows > length:
                rows = length - t  # zero-padded tail of a short document
                if rows < 0:
                    rows = 0
            acc = bias[k]
            for r in range(rows):
                for c in range(dim):
                    acc += filters[k, r * dim + c] * emb[t + r, c]
            if acc < 0.0:
                acc = 0.0
            if t == 0 or acc > best:
                best = acc
                best_t = t
        pooled[k] = best
        argmax[k] = best_t
    return pooled_arr, argmax_arr


def conv_backward(double[:, ::1] emb, double[:, ::1] filters,
                  double[::1] d_pooled, double[::1] pooled, cnp.int64_t[::1] argmax,
                  int width,
                  double[:, ::1] d_emb, double[:, ::1] d_filters, double[::1] d_bias):
    cdef Py_ssize_t length = emb.shape[0]
    cdef Py_ssize_t dim = emb.shape[1]
    cdef Py_ssize_t nfilt = filters.shape[0]
    cdef Py_ssize_t k, t, r, c, rows
    cdef double g

    for k in range(nfilt):
        if pooled[k] <= 0.0:
            continue
        g = d_pooled[k]
        if g == 0.0:
            continue
        t = argmax[k]
        rows = width
        if t + rows > length:
            rows = length - t
        d_bias[k] += g
        for r in range(rows):
            for c in range(dim):
                d_filters[k, r * dim + c] += g * emb[t + r, c]
                d_emb[t + r, c] += g * filters[k, r * dim + c]
