"""Linear-code analysis over GF(4).

A code is defined by a parity-check matrix; dimension, generator, exact
minimum distance, weight distribution and the MDS/AMDS/near-MDS predicates
are all derived from it.  All computations are exact; anything that would
exceed the configured search caps raises :class:`CapacityError` rather than
returning an approximation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional

from . import backend
from .errors import CapacityError
from .matrix import Gf4Matrix, delete_cols, null_space, rank, rref, submatrix_cols

Q = 4

#: Codeword enumeration is used for the minimum distance when k is at most
#: this; larger dimensions fall back to the dependent-column-subset search.
ENUM_CAP = 14

#: Default maximum subset size for the dependent-column search.  The largest
#: minimum distance in the catalog is 8, so 9 covers every construction with
#: margin.
SUBSET_LIMIT = 9


class LinearCode:
    """A linear code over GF(4) given by a parity-check matrix.

    ``n`` is the length, ``k = n - rank(H)`` the dimension.  The generator
    (a deterministic null-space basis of H) and the minimum distance are
    computed lazily and cached.
    """

    def __init__(self, parity_check: Gf4Matrix):
        if parity_check.cols < 1:
            raise ValueError("parity-check matrix needs at least one column")
        self.parity_check = parity_check
        self.n = parity_check.cols
        self._rank = rank(parity_check)
        self.k = self.n - self._rank
        self._generator: Optional[Gf4Matrix] = None
        self._d: Optional[int] = None

    @property
    def generator(self) -> Gf4Matrix:
        if self._generator is None:
            self._generator = null_space(self.parity_check)
        return self._generator

    @property
    def redundancy(self) -> int:
        """n - k, the rank of the parity-check matrix."""
        return self._rank

    def __repr__(self):
        d = f",{self._d}" if self._d is not None else ""
        return f"LinearCode[{self.n},{self.k}{d}]"


def from_parity_check(h: Gf4Matrix) -> LinearCode:
    return LinearCode(h)


def _subset_search(h: Gf4Matrix, limit: int) -> Optional[int]:
    """Smallest w <= limit such that some w columns of h are linearly
    dependent, scanning subset sizes upward and subsets lexicographically."""
    n = h.cols
    for w in range(1, min(limit, n) + 1):
        for cols in itertools.combinations(range(n), w):
            if rank(submatrix_cols(h, cols)) < w:
                return w
    return None


def min_distance(c: LinearCode, limit: Optional[int] = None) -> Optional[int]:
    """Exact minimum distance of c.

    If ``limit`` is given and d would exceed it, returns None (a
    "greater than limit" verdict).  Strategy: codeword enumeration for
    k <= ENUM_CAP, dependent-column-subset search otherwise; both agree
    wherever both apply.
    """
    if c.k < 1:
        raise ValueError("minimum distance undefined for the zero code (k=0)")
    if c._d is not None:
        d = c._d
        if limit is not None and d > limit:
            return None
        return d
    if c.k <= ENUM_CAP:
        d = backend.min_weight(c.generator.array)
        c._d = d
        if limit is not None and d > limit:
            return None
        return d
    cap = SUBSET_LIMIT if limit is None else limit
    found = _subset_search(c.parity_check, cap)
    if found is not None:
        c._d = found
        return found
    if limit is not None:
        return None
    raise CapacityError(
        f"minimum distance of [{c.n},{c.k}] code exceeds subset-search cap {cap}"
    )


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts by Hamming weight, A_0..A_n."""

    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self) -> int:
        return len(self.counts)

    def total(self) -> int:
        return sum(self.counts)

    def to_csv(self) -> str:
        lines = ["i,A_i"]
        lines += [f"{i},{a}" for i, a in enumerate(self.counts)]
        return "\n".join(lines) + "\n"


def weight_distribution_bruteforce(c: LinearCode, cap: int = ENUM_CAP) -> WeightDistribution:
    """Exact weight distribution by enumerating all 4^k codewords."""
    if c.k > cap:
        raise CapacityError(f"weight enumeration cap is k <= {cap}, got k = {c.k}")
    counts = backend.weight_counts(c.generator.array) if c.k else [0] * (c.n + 1)
    if c.k == 0:
        counts[0] = 1
    return WeightDistribution(tuple(int(x) for x in counts))


def mds_weight_distribution(n: int, k: int) -> WeightDistribution:
    """Closed-form weight distribution of an [n, k, n-k+1] MDS code at q=4:

        A_i = C(n,i) * sum_{j=0}^{i-d} (-1)^j C(i,j) (q^{i+1-d-j} - 1)
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got ({n},{k})")
    d = n - k + 1
    counts = [0] * (n + 1)
    counts[0] = 1
    for i in range(d, n + 1):
        a = sum(
            (-1) ** j * comb(i, j) * (Q ** (i + 1 - d - j) - 1)
            for j in range(i - d + 1)
        )
        counts[i] = comb(n, i) * a
    return WeightDistribution(tuple(counts))


def is_mds(c: LinearCode) -> bool:
    """d = n - k + 1."""
    return min_distance(c) == c.n - c.k + 1


def is_amds(c: LinearCode) -> bool:
    """d = n - k (almost MDS)."""
    return min_distance(c) == c.n - c.k


def is_near_mds(c: LinearCode) -> bool:
    """d = n - k and the dual distance equals k."""
    if not is_amds(c):
        return False
    return min_distance(dual(c)) == c.k


def mds_constraints_ok(n: int, k: int) -> bool:
    """Existence preconditions for a quaternary [n, k, n-k+1] MDS code:
    if k >= 2 then n-k+1 <= q, and if k <= n-2 then k+1 <= q."""
    if k >= 2 and n - k + 1 > Q:
        return False
    if k <= n - 2 and k + 1 > Q:
        return False
    return True


def amds_length_ok(n: int, k: int) -> bool:
    """AMDS length bound at q=4: n - k < 2q - 1 for k >= 3 (vacuous below)."""
    return k < 3 or n - k < 2 * Q - 1


def near_mds_length_ok(n: int, k: int) -> bool:
    """Near-MDS length bound at q=4: n <= 2q + k - 2 for k >= 3."""
    return k < 3 or n <= 2 * Q + k - 2


def _independent_rows(m: Gf4Matrix) -> Gf4Matrix:
    """Drop rows that are linear combinations of earlier rows (top-down)."""
    keep: list[int] = []
    r = 0
    for i in range(m.rows):
        cand = Gf4Matrix(m.array[keep + [i], :])
        if rank(cand) > r:
            keep.append(i)
            r += 1
    return Gf4Matrix(m.array[keep, :])


def puncture(c: LinearCode, cols: Iterable[int]) -> LinearCode:
    """Delete the given coordinates from the parity-check description:
    drop the columns of H, then drop rows that became dependent."""
    drop = set(cols)
    _check_cols(c, drop)
    h = delete_cols(c.parity_check, drop)
    return LinearCode(_independent_rows(h))


def shorten(c: LinearCode, cols: Iterable[int]) -> LinearCode:
    """Restrict to codewords that vanish on the given coordinates, then
    delete those coordinates."""
    drop = set(cols)
    _check_cols(c, drop)
    # basis of {x in C : x_j = 0 for j in cols}
    extra = Gf4Matrix.identity(c.n).array[sorted(drop), :]
    stacked = Gf4Matrix(
        list(c.parity_check.array) + list(extra)
    )
    sub_gen = null_space(stacked)
    sub_gen_short = delete_cols(sub_gen, drop)
    return LinearCode(null_space(sub_gen_short))


def _check_cols(c: LinearCode, drop: set[int]) -> None:
    for j in drop:
        if not 0 <= j < c.n:
            raise IndexError(f"coordinate {j} out of range")
    if len(drop) >= c.n:
        raise ValueError("cannot delete every coordinate")


def dual(c: LinearCode) -> LinearCode:
    """The dual code: generator and parity-check roles swapped."""
    return LinearCode(c.generator)


def same_codeword_set(a: LinearCode, b: LinearCode) -> bool:
    """True iff the two codes have identical codeword sets (equal generator
    row spaces, compared via canonical RREF)."""
    if a.n != b.n or a.k != b.k:
        return False
    ra, _ = rref(a.generator)
    rb, _ = rref(b.generator)
    return ra == rb
