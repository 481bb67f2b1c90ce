# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for row-space enumeration over GF(4).

Same contracts and enumeration order as ``_kernels_py``: vector number m has
row i weighted by the base-4 digit (m >> 2i) & 3.  The walk is an odometer
over the digits; each increment XORs a precomputed transition row into the
current vector, so a full pass costs O(4^k * n) byte operations.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

cdef unsigned char[4][4] MUL
MUL[0][:] = [0, 0, 0, 0]
MUL[1][:] = [0, 1, 2, 3]
MUL[2][:] = [0, 2, 3, 1]
MUL[3][:] = [0, 3, 1, 2]


cdef cnp.ndarray _steps(cnp.ndarray rows):
    # steps[i, v, :] = v*row_i XOR ((v+1) mod 4)*row_i
    cdef Py_ssize_t k = rows.shape[0]
    cdef Py_ssize_t n = rows.shape[1]
    cdef cnp.ndarray out = np.zeros((k, 4, n), dtype=np.uint8)
    cdef unsigned char[:, :, :] s = out
    cdef const unsigned char[:, :] r = rows
    cdef Py_ssize_t i, j, v
    for i in range(k):
        for v in range(4):
            for j in range(n):
                s[i, v, j] = MUL[v][r[i, j]] ^ MUL[(v + 1) & 3][r[i, j]]
    return out


def _check(rows):
    arr = np.ascontiguousarray(rows, dtype=np.uint8)
    if arr.ndim != 2:
        raise ValueError("rows must be a 2-d array")
    if arr.shape[0] > 28:
        raise ValueError("too many rows for exhaustive enumeration")
    return arr


def min_weight(rows):
    """Minimum Hamming weight over the nonzero vectors of the row space."""
    cdef cnp.ndarray arr = _check(rows)
    cdef Py_ssize_t k = arr.shape[0]
    cdef Py_ssize_t n = arr.shape[1]
    if k == 0:
        raise ValueError("empty row set has no nonzero vectors")
    cdef cnp.ndarray steps_a = _steps(arr)
    cdef unsigned char[:, :, :] steps = steps_a
    cdef cnp.ndarray cw_a = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[:] cw = cw_a
    cdef cnp.ndarray dig_a = np.zeros(k, dtype=np.uint8)
    cdef unsigned char[:] dig = dig_a
    cdef unsigned long long total = (<unsigned long long>1) << (2 * k)
    cdef unsigned long long m
    cdef Py_ssize_t i, j
    cdef int old
    cdef Py_ssize_t w, best = n + 1
    for m in range(1, total):
        i = 0
        while True:
            old = dig[i]
            dig[i] = (old + 1) & 3
            for j in range(n):
                cw[j] ^= steps[i, old, j]
            if old != 3:
                break
            i += 1
        w = 0
        for j in range(n):
            if cw[j]:
                w += 1
        if w < best:
            best = w
            if best == 1:
                break
    return int(best)


def weight_counts(rows):
    """Counts of vectors of each weight 0..n over all 4^k span vectors."""
    cdef cnp.ndarray arr = _check(rows)
    cdef Py_ssize_t k = arr.shape[0]
    cdef Py_ssize_t n = arr.shape[1]
    cdef cnp.ndarray counts_a = np.zeros(n + 1, dtype=np.int64)
    cdef long long[:] counts = counts_a
    counts[0] += 1
    if k == 0:
        return counts_a.tolist()
    cdef cnp.ndarray steps_a = _steps(arr)
    cdef unsigned char[:, :, :] steps = steps_a
    cdef cnp.ndarray cw_a = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[:] cw = cw_a
    cdef cnp.ndarray dig_a = np.zeros(k, dtype=np.uint8)
    cdef unsigned char[:] dig = dig_a
    cdef unsigned long long total = (<unsigned long long>1) << (2 * k)
    cdef unsigned long long m
    cdef Py_ssize_t i, j, w
    cdef int old
    for m in range(1, total):
        i = 0
        while True:
            old = dig[i]
            dig[i] = (old + 1) & 3
            for j in range(n):
                cw[j] ^= steps[i, old, j]
            if old != 3:
                break
            i += 1
        w = 0
        for j in range(n):
            if cw[j]:
                w += 1
        counts[w] += 1
    return counts_a.tolist()


def covering_min_weights(rows):
    """Per coordinate: the minimum weight of a span vector of weight >= 2
    whose support contains that coordinate (0 if no such vector exists)."""
    cdef cnp.ndarray arr = _check(rows)
    cdef Py_ssize_t k = arr.shape[0]
    cdef Py_ssize_t n = arr.shape[1]
    cdef cnp.ndarray best_a = np.full(n, n + 1, dtype=np.int64)
    cdef long long[:] best = best_a
    cdef Py_ssize_t j
    if k == 0:
        for j in range(n):
            best[j] = 0
        return best_a.tolist()
    cdef cnp.ndarray steps_a = _steps(arr)
    cdef unsigned char[:, :, :] steps = steps_a
    cdef cnp.ndarray cw_a = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[:] cw = cw_a
    cdef cnp.ndarray dig_a = np.zeros(k, dtype=np.uint8)
    cdef unsigned char[:] dig = dig_a
    cdef unsigned long long total = (<unsigned long long>1) << (2 * k)
    cdef unsigned long long m
    cdef Py_ssize_t i, w
    cdef int old
    for m in range(1, total):
        i = 0
        while True:
            old = dig[i]
            dig[i] = (old + 1) & 3
            for j in range(n):
                cw[j] ^= steps[i, old, j]
            if old != 3:
                break
            i += 1
        w = 0
        for j in range(n):
            if cw[j]:
                w += 1
        if w >= 2:
            for j in range(n):
                if cw[j] and w < best[j]:
                    best[j] = w
    for j in range(n):
        if best[j] == n + 1:
            best[j] = 0
    return best_a.tolist()
