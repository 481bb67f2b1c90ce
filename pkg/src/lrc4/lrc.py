"""Locality semantics for GF(4) codes.

Per-symbol locality, locality-row certificates, the Singleton-like distance
bound, optimality verdicts, and the deleted-row substructure checks.

A *locality row* is a row of the parity-check matrix H of weight at most
r+1; a coordinate covered by such a row can be repaired from the at most r
other coordinates in the row's support.  A profile designates an ordered
subset of rows of H as locality rows (H1); the remaining rows form H2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import ceil
from typing import Optional, Sequence

from . import backend
from .code import LinearCode, is_amds, is_mds, min_distance
from .errors import CapacityError
from .matrix import Gf4Matrix, delete_cols, delete_rows, rref

#: Exact-locality search enumerates the dual row space; cap on n - k.
LOCALITY_ENUM_CAP = 14


@dataclass(frozen=True)
class LrcProfile:
    """Designated locality rows of a parity-check matrix.

    ``locality_rows`` are 0-based row indices of H (the H1 block, in order);
    ``l`` and ``u`` count the H1 and H2 rows; ``repair_groups[i]`` is the
    support of the first locality row covering coordinate i, minus i (None
    when no locality row covers i); ``r_claimed`` is the locality bound.
    """

    locality_rows: tuple[int, ...]
    r_claimed: int
    l: int
    u: int
    repair_groups: tuple[Optional[tuple[int, ...]], ...]

    @classmethod
    def build(cls, h: Gf4Matrix, locality_rows: Sequence[int], r: int) -> "LrcProfile":
        rows = tuple(locality_rows)
        for i in rows:
            if not 0 <= i < h.rows:
                raise IndexError(f"locality row index {i} out of range")
        if len(set(rows)) != len(rows):
            raise ValueError("duplicate locality row indices")
        if r < 1:
            raise ValueError("locality bound must be >= 1")
        groups: list[Optional[tuple[int, ...]]] = []
        supports = [
            (ri, tuple(j for j in range(h.cols) if h[ri, j])) for ri in rows
        ]
        for j in range(h.cols):
            group = None
            for _, supp in supports:
                if j in supp:
                    group = tuple(x for x in supp if x != j)
                    break
            groups.append(group)
        return cls(
            locality_rows=rows,
            r_claimed=r,
            l=len(rows),
            u=h.rows - len(rows),
            repair_groups=tuple(groups),
        )


@dataclass(frozen=True)
class OptimalityVerdict:
    """Outcome of the distance-optimality check for one (code, profile)."""

    n: int
    k: int
    r: int
    d: Optional[int]
    bound: int
    is_optimal: bool
    failures: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()


def singleton_like_bound(n: int, k: int, r: int) -> int:
    """d <= n - k - ceil(k/r) + 2; reduces to Singleton when r = k."""
    if not (n > k >= 1 and r >= 1):
        raise ValueError(f"need n > k >= 1 and r >= 1, got ({n},{k},{r})")
    return n - k - ceil(k / r) + 2


def distance_cap(q: int, k: int, r: int) -> int:
    """Upper bound on the distance of an optimal (n,k,r)-LRC with k > r:
    q when r does not divide k-1, else 2q."""
    if not k > r >= 1:
        raise ValueError(f"need k > r >= 1, got (k={k}, r={r})")
    return 2 * q if (k - 1) % r == 0 else q


def verify_locality_certificate(c: LinearCode, p: LrcProfile) -> bool:
    """True iff every designated locality row has weight <= r_claimed + 1
    and the designated rows jointly cover all coordinates."""
    h = c.parity_check
    covered = set()
    for ri in p.locality_rows:
        supp = [j for j in range(c.n) if h[ri, j]]
        if len(supp) > p.r_claimed + 1:
            return False
        covered.update(supp)
    return len(covered) == c.n


def exact_locality(c: LinearCode, cap: int = LOCALITY_ENUM_CAP) -> list[Optional[int]]:
    """Per-coordinate locality by exhausting the dual code.

    Entry i is the minimum of wt(h) - 1 over dual codewords h of weight >= 2
    with i in supp(h), or None when no such codeword exists.  Raises
    CapacityError when n - k exceeds ``cap``.
    """
    if c.n - c.k > cap:
        raise CapacityError(
            f"exact locality cap is n - k <= {cap}, got {c.n - c.k}"
        )
    reduced, pivots = rref(c.parity_check)
    basis = Gf4Matrix(reduced.array[: len(pivots), :])
    if basis.rows == 0:
        return [None] * c.n
    best = backend.covering_min_weights(basis.array)
    return [b - 1 if b else None for b in best]


def code_locality(c: LinearCode, cap: int = LOCALITY_ENUM_CAP) -> Optional[int]:
    """max over coordinates of exact_locality; None if any coordinate has
    no covering dual codeword."""
    per = exact_locality(c, cap)
    if any(v is None for v in per):
        return None
    return max(per)  # type: ignore[arg-type]


def is_optimal_lrc(c: LinearCode, p: LrcProfile) -> OptimalityVerdict:
    """Combine the locality certificate, exact minimum distance and the
    Singleton-like bound into a verdict.  Capacity errors surface as
    failures, never as optimality claims."""
    failures: list[str] = []
    notes: list[str] = []
    bound = singleton_like_bound(c.n, c.k, p.r_claimed)
    if not verify_locality_certificate(c, p):
        failures.append("locality-certificate")
    d: Optional[int] = None
    try:
        d = min_distance(c)
    except CapacityError:
        failures.append("distance-capacity")
    if d is not None and d != bound:
        failures.append(f"bound-gap(d={d},bound={bound})")
    try:
        per = exact_locality(c)
        if any(v is None or v > p.r_claimed for v in per):
            failures.append("exact-locality-exceeds-claim")
    except CapacityError:
        notes.append("locality <= r certified, exactness unverified")
    return OptimalityVerdict(
        n=c.n,
        k=c.k,
        r=p.r_claimed,
        d=d,
        bound=bound,
        is_optimal=not failures,
        failures=tuple(failures),
        notes=tuple(notes),
    )


def delete_locality_rows(
    c: LinearCode, p: LrcProfile, rows: Sequence[int]
) -> tuple[LinearCode, int]:
    """Remove the chosen locality rows and every column they cover.

    Returns the residual code and the number of deleted columns; a column
    covered by several deleted rows is counted once.
    """
    chosen = list(rows)
    for ri in chosen:
        if ri not in p.locality_rows:
            raise ValueError(f"row {ri} is not a designated locality row")
    h = c.parity_check
    cols = {j for ri in chosen for j in range(c.n) if h[ri, j]}
    if len(cols) >= c.n:
        raise ValueError("deletion would remove every coordinate")
    residual = delete_cols(delete_rows(h, chosen), cols)
    return LinearCode(residual), len(cols)


def _residuals(c: LinearCode, p: LrcProfile, t: int):
    for choice in itertools.combinations(p.locality_rows, t):
        yield delete_locality_rows(c, p, choice)[0]


def check_substructure_mds(c: LinearCode, p: LrcProfile) -> bool:
    """Deleting any ceil(k/r) - 1 locality rows (and covered columns) must
    leave an MDS code with the same minimum distance."""
    d = min_distance(c)
    t = ceil(c.k / p.r_claimed) - 1
    if t == 0:
        return is_mds(c)
    return all(
        is_mds(res) and min_distance(res) == d for res in _residuals(c, p, t)
    )


def check_substructure_amds(c: LinearCode, p: LrcProfile) -> bool:
    """Deleting any ceil(k/r) - 2 locality rows (and covered columns) must
    leave an almost-MDS code with the same minimum distance."""
    if ceil(c.k / p.r_claimed) < 2:
        raise ValueError("check requires ceil(k/r) >= 2")
    d = min_distance(c)
    t = ceil(c.k / p.r_claimed) - 2
    if t == 0:
        return is_amds(c)
    return all(
        is_amds(res) and min_distance(res) == d for res in _residuals(c, p, t)
    )


def profile_chain_ok(c: LinearCode, p: LrcProfile) -> bool:
    """ceil(k/r) <= ceil(n/(r+1)) <= l <= n - k."""
    r = p.r_claimed
    return (
        ceil(c.k / r) <= ceil(c.n / (r + 1)) <= p.l <= c.n - c.k
    )


def locality_rows_disjoint(c: LinearCode, p: LrcProfile) -> bool:
    """True iff the designated rows have pairwise disjoint supports, each of
    weight exactly r_claimed + 1."""
    h = c.parity_check
    seen: set[int] = set()
    for ri in p.locality_rows:
        supp = {j for j in range(c.n) if h[ri, j]}
        if len(supp) != p.r_claimed + 1 or seen & supp:
            return False
        seen |= supp
    return True


# --- profile sidecar (comment lines of the matrix text format) -------------

def profile_comments(p: LrcProfile) -> dict[str, str]:
    return {
        "locality_rows": ",".join(str(i) for i in p.locality_rows),
        "r": str(p.r_claimed),
    }


def profile_from_comments(h: Gf4Matrix, comments: dict[str, str]) -> Optional[LrcProfile]:
    """Rebuild a profile from sidecar comments; None if absent."""
    if "locality_rows" not in comments or "r" not in comments:
        return None
    rows = [int(tok) for tok in comments["locality_rows"].split(",") if tok]
    return LrcProfile.build(h, rows, int(comments["r"]))
