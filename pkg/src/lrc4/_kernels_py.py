"""Pure-Python (numpy) kernels for row-space enumeration over GF(4).

These are the fallback implementations of the hot loops: exhaustive
enumeration of the 4^k vectors spanned by k independent rows.  The compiled
twin in ``_kernels_c.pyx`` produces bit-identical results; selection happens
in ``backend``.

Enumeration order is fixed: vector number m has row i weighted by the base-4
digit ``(m >> 2i) & 3``.  The numpy variant materialises the span of the
first ``min(k, 9)`` rows once and streams XOR offsets over it, so memory
stays bounded while the arithmetic is vectorised.
"""

import numpy as np

from .gf4 import MUL_TABLE

_BASE_ROWS = 9  # 4^9 x n uint8 block, ~5 MB at n=20


def _as_array(rows) -> np.ndarray:
    arr = np.asarray(rows, dtype=np.uint8)
    if arr.ndim != 2:
        raise ValueError("rows must be a 2-d array")
    return arr


def _base_block(rows: np.ndarray, k0: int) -> np.ndarray:
    n = rows.shape[1]
    block = np.zeros((1, n), dtype=np.uint8)
    for i in range(k0):
        g = rows[i]
        block = np.concatenate([block ^ MUL_TABLE[v, g] for v in range(4)])
    return block


def _offsets(rows: np.ndarray, k0: int):
    k = rows.shape[0]
    n = rows.shape[1]
    hi = rows[k0:]
    total = 4 ** (k - k0)
    for m in range(total):
        off = np.zeros(n, dtype=np.uint8)
        mm = m
        for i in range(k - k0):
            d = mm & 3
            mm >>= 2
            if d:
                off ^= MUL_TABLE[d, hi[i]]
        yield m, off


def min_weight(rows) -> int:
    """Minimum Hamming weight over the nonzero vectors of the row space."""
    arr = _as_array(rows)
    k, n = arr.shape
    if k == 0:
        raise ValueError("empty row set has no nonzero vectors")
    k0 = min(k, _BASE_ROWS)
    base = _base_block(arr, k0)
    best = n + 1
    for m, off in _offsets(arr, k0):
        w = np.count_nonzero(base ^ off, axis=1)
        if m == 0:
            w[0] = n + 1  # skip the zero vector
        chunk_min = int(w.min())
        if chunk_min < best:
            best = chunk_min
            if best == 1:
                break
    return best


def weight_counts(rows) -> list[int]:
    """Counts of vectors of each weight 0..n over all 4^k span vectors."""
    arr = _as_array(rows)
    k, n = arr.shape
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        counts[0] = 1
        return counts.tolist()
    k0 = min(k, _BASE_ROWS)
    base = _base_block(arr, k0)
    for _, off in _offsets(arr, k0):
        w = np.count_nonzero(base ^ off, axis=1)
        counts += np.bincount(w, minlength=n + 1)
    return counts.tolist()


def covering_min_weights(rows) -> list[int]:
    """Per coordinate: the minimum weight of a span vector of weight >= 2
    whose support contains that coordinate (0 if no such vector exists)."""
    arr = _as_array(rows)
    k, n = arr.shape
    if k == 0:
        return [0] * n
    k0 = min(k, _BASE_ROWS)
    base = _base_block(arr, k0)
    sentinel = n + 1
    best = np.full(n, sentinel, dtype=np.int64)
    for _, off in _offsets(arr, k0):
        block = base ^ off
        w = np.count_nonzero(block, axis=1)
        usable = w >= 2
        if not usable.any():
            continue
        masked = np.where((block != 0) & usable[:, None], w[:, None], sentinel)
        np.minimum(best, masked.min(axis=0), out=best)
    best[best == sentinel] = 0
    return best.tolist()
