"""Arithmetic in the four-element field GF(4).

Elements are encoded as the integers 0..3 with the fixed convention

    0 <-> 0,  1 <-> 1,  2 <-> w,  3 <-> w^2,

where w is a primitive element satisfying w^2 = w + 1.  Under this encoding
addition is bitwise XOR (characteristic 2) and multiplication goes through a
precomputed 4x4 table, so every operation is branch-free and bit-exact.
"""

import numpy as np

ZERO = 0
ONE = 1
W = 2   # w
W2 = 3  # w^2 = w + 1

ELEMENTS = (0, 1, 2, 3)
NONZERO = (1, 2, 3)

# MUL[a][b]: the nonzero elements form a cyclic group of order 3.
MUL = (
    (0, 0, 0, 0),
    (0, 1, 2, 3),
    (0, 2, 3, 1),
    (0, 3, 1, 2),
)

# INV[a] for a != 0 (1 is self-inverse, w and w^2 are mutual inverses).
INV = (None, 1, 3, 2)

MUL_TABLE = np.array(MUL, dtype=np.uint8)

# Symbols used by the matrix text format.
TO_SYMBOL = ("0", "1", "w", "W")
FROM_SYMBOL = {"0": 0, "1": 1, "w": 2, "W": 3}


def gf4_add(a, b):
    """Field sum; addition is XOR of the 2-bit codes."""
    return a ^ b


def gf4_mul(a, b):
    """Field product via the precomputed table."""
    return MUL[a][b]


def gf4_inv(a):
    """Multiplicative inverse of a nonzero element."""
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return INV[a]


def validate_element(a):
    if not isinstance(a, (int, np.integer)) or not 0 <= a <= 3:
        raise ValueError(f"not a GF(4) element: {a!r}")
    return int(a)
