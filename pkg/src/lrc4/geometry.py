"""Projective geometry over GF(4) and the column-to-point checks.

Points of PG(m,4), caps, and the necessary-condition verifier that converts
parity-check columns covered by a common locality row into projective points
(restricted to the non-locality rows) and bounds how many distinct points
can coexist.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .code import LinearCode, min_distance
from .errors import Lrc4Error
from .gf4 import INV, MUL, NONZERO, W, W2
from .lrc import LrcProfile
from .matrix import Gf4Matrix, rank

Q = 4


class DependencyError(Lrc4Error):
    """A restricted column combination vanished: the underlying columns are
    linearly dependent (a small-support codeword exists)."""


@dataclass(frozen=True)
class PgPoint:
    """A point of PG(m,4): a nonzero coordinate vector normalized so its
    first nonzero entry is 1."""

    coords: tuple[int, ...]

    def __post_init__(self):
        for x in self.coords:
            if not 0 <= x <= 3:
                raise ValueError("coordinates must be GF(4) elements")
        first = next((x for x in self.coords if x), None)
        if first is None:
            raise ValueError("the zero vector is not a projective point")
        if first != 1:
            raise ValueError("point is not in normal form; use normalize()")

    @property
    def m(self) -> int:
        return len(self.coords) - 1


def normalize(v: Sequence[int]) -> PgPoint:
    """Scale a nonzero vector so its first nonzero entry becomes 1."""
    vec = tuple(int(x) for x in v)
    first = next((x for x in vec if x), None)
    if first is None:
        raise ValueError("cannot normalize the zero vector")
    inv = INV[first]
    return PgPoint(tuple(MUL[inv][x] for x in vec))


def pg_points(m: int) -> list[PgPoint]:
    """All (4^(m+1) - 1)/3 points of PG(m,4), lexicographic on normal forms."""
    if m < 0:
        raise ValueError("m must be >= 0")
    pts: set[tuple[int, ...]] = set()
    dim = m + 1

    def rec(prefix: list[int]):
        if len(prefix) == dim:
            if any(prefix):
                pts.add(normalize(prefix).coords)
            return
        for x in range(4):
            rec(prefix + [x])

    rec([])
    return [PgPoint(c) for c in sorted(pts)]


def collinear(p: PgPoint, q: PgPoint, r: PgPoint) -> bool:
    """Three points are collinear iff their coordinate matrix has rank <= 2."""
    return rank(Gf4Matrix([p.coords, q.coords, r.coords])) <= 2


@dataclass(frozen=True)
class CapReport:
    points: tuple[PgPoint, ...]
    is_cap: bool
    witness: Optional[tuple[PgPoint, PgPoint, PgPoint]]

    def render(self) -> str:
        lines = [f"{len(self.points)} points:"]
        lines += [f"  {p.coords}" for p in self.points]
        if self.is_cap:
            lines.append("PASS: no 3 points collinear")
        else:
            assert self.witness is not None
            a, b, c = self.witness
            lines.append(f"FAIL: collinear triple {a.coords}, {b.coords}, {c.coords}")
        return "\n".join(lines)


def is_cap(points: Sequence[PgPoint]) -> CapReport:
    """Check that no 3 of the (pairwise distinct) points are collinear."""
    pts = tuple(points)
    if len(set(pts)) != len(pts):
        raise ValueError("cap check requires pairwise distinct points")
    for a, b, c in combinations(pts, 3):
        if collinear(a, b, c):
            return CapReport(pts, False, (a, b, c))
    return CapReport(pts, True, None)


def m2(m: int) -> int:
    """Largest cap size in PG(m,4) for the tabulated dimensions:
    m=2 -> 6 (q+2, q even), m=3 -> 17 (q^2+1)."""
    table = {2: 6, 3: 17}
    if m not in table:
        raise ValueError(f"m2 tabulated only for m in {{2,3}}, got {m}")
    return table[m]


# --- columns-to-points machinery -------------------------------------------

def _h2_rows(h: Gf4Matrix, p: LrcProfile) -> list[int]:
    loc = set(p.locality_rows)
    return [i for i in range(h.rows) if i not in loc]


def _covering_row(h: Gf4Matrix, p: LrcProfile, cols: Sequence[int]) -> int:
    for ri in p.locality_rows:
        if all(h[ri, j] for j in cols):
            return ri
    raise ValueError(f"columns {tuple(cols)} share no locality row")


def _restrict(h: Gf4Matrix, rows: list[int], combo: dict[int, int]) -> tuple[int, ...]:
    """The vector sum_j coeff_j * column_j, restricted to the given rows."""
    out = []
    for ri in rows:
        acc = 0
        for j, cj in combo.items():
            acc ^= MUL[cj][h[ri, j]]
        out.append(acc)
    return tuple(out)


def pair_point(h: Gf4Matrix, p: LrcProfile, i: int, j: int) -> PgPoint:
    """The projective point generated by two columns covered by the same
    locality row, restricted to the non-locality rows.

    The coefficients cancel the shared locality row; for an all-ones row
    this is simply column_i + column_j.  A zero restriction means 4 columns
    of the full matrix are dependent and raises DependencyError.
    """
    if i == j:
        raise ValueError("need two distinct columns")
    rows = _h2_rows(h, p)
    if not rows:
        raise ValueError("no non-locality rows: points would live in PG(-1,4)")
    ri = _covering_row(h, p, (i, j))
    combo = {i: INV[h[ri, i]], j: INV[h[ri, j]]}
    vec = _restrict(h, rows, combo)
    if not any(vec):
        raise DependencyError(
            f"columns {i},{j} coincide on the non-locality rows "
            "(a 4-column dependency exists)"
        )
    return normalize(vec)


def triple_points(
    h: Gf4Matrix, p: LrcProfile, i: int, j: int, k: int
) -> tuple[PgPoint, PgPoint]:
    """The two projective classes generated by three columns covered by the
    same locality row: coefficient patterns (1, b, 1+b) for b in {w, w^2}
    (scaled per-column to cancel the locality row)."""
    if len({i, j, k}) != 3:
        raise ValueError("need three distinct columns")
    rows = _h2_rows(h, p)
    if not rows:
        raise ValueError("no non-locality rows: points would live in PG(-1,4)")
    ri = _covering_row(h, p, (i, j, k))
    out = []
    for b in (W, W2):
        coeffs = (1, b, b ^ 1)
        combo = {
            col: MUL[c][INV[h[ri, col]]]
            for col, c in zip((i, j, k), coeffs)
        }
        vec = _restrict(h, rows, combo)
        if not any(vec):
            raise DependencyError(
                f"columns {i},{j},{k} generate a zero restriction "
                "(a dependency on at most 5 columns exists)"
            )
        out.append(normalize(vec))
    return out[0], out[1]


@dataclass(frozen=True)
class KeyLemmaReport:
    """Outcome of one necessary-condition case for a disjoint-group matrix."""

    case: int
    l: int
    r: int
    u: int
    lhs: int
    rhs: int
    count_ok: bool
    distinct_ok: bool
    cap: Optional[CapReport]
    passed: bool
    detail: str = ""


def _check_shape(h: Gf4Matrix, p: LrcProfile) -> tuple[int, int, int]:
    """The verifier applies to l disjoint weight-(r+1) locality rows covering
    all columns, atop u >= 1 remaining rows."""
    seen: set[int] = set()
    r = p.r_claimed
    for ri in p.locality_rows:
        supp = {j for j in range(h.cols) if h[ri, j]}
        if len(supp) != r + 1:
            raise ValueError(f"locality row {ri} has weight {len(supp)} != r+1")
        if seen & supp:
            raise ValueError("locality rows must have disjoint supports")
        seen |= supp
    if len(seen) != h.cols:
        raise ValueError("locality rows must cover every column")
    u = h.rows - p.l
    if u < 1:
        raise ValueError("no non-locality rows: nothing to check")
    return p.l, r, u


def _groups(h: Gf4Matrix, p: LrcProfile) -> list[list[int]]:
    return [
        [j for j in range(h.cols) if h[ri, j]] for ri in p.locality_rows
    ]


def keylemma_check(h: Gf4Matrix, p: LrcProfile, case: int) -> KeyLemmaReport:
    """Necessary conditions on a disjoint-repair-group parity-check matrix.

    case 1: the l*C(r+1,2) two-column points must be pairwise distinct and
            fit in PG(u-1,4):  l*C(r+1,2) <= (4^u-1)/3.
    case 2 (requires r <= 4): additionally each row's 2*C(r+1,3) three-column
            points are pairwise distinct and disjoint from the two-column
            points, and  l*C(r+1,2) + 2*C(r+1,3) <= (4^u-1)/3.
    case 3: the l*r points anchored at each group's first column form a cap
            with  l*r <= m2(u-1),  and the l*2*C(r+1,3) three-column points
            are pairwise distinct with  l*2*C(r+1,3) <= (4^u-1)/3.
    """
    l, r, u = _check_shape(h, p)
    rhs = (Q**u - 1) // 3
    groups = _groups(h, p)
    detail = ""

    def all_pair_points() -> Optional[list[PgPoint]]:
        nonlocal detail
        try:
            return [
                pair_point(h, p, i, j)
                for g in groups
                for i, j in combinations(g, 2)
            ]
        except DependencyError as exc:
            detail = str(exc)
            return None

    if case == 1:
        lhs = l * comb(r + 1, 2)
        pts = all_pair_points()
        distinct = pts is not None and len(set(pts)) == len(pts)
        count_ok = lhs <= rhs
        return KeyLemmaReport(1, l, r, u, lhs, rhs, count_ok, distinct, None,
                              count_ok and distinct, detail)

    if case == 2:
        if r > 4:
            raise ValueError("case 2 is stated only for r <= 4")
        lhs = l * comb(r + 1, 2) + (Q - 2) * comb(r + 1, 3)
        pts = all_pair_points()
        distinct = pts is not None and len(set(pts)) == len(pts)
        if distinct:
            pair_set = set(pts)
            try:
                for g in groups:
                    row_triples: list[PgPoint] = []
                    for i, j, k in combinations(g, 3):
                        row_triples.extend(triple_points(h, p, i, j, k))
                    if len(set(row_triples)) != len(row_triples):
                        distinct = False
                        break
                    if pair_set & set(row_triples):
                        distinct = False
                        break
            except DependencyError as exc:
                detail = str(exc)
                distinct = False
        count_ok = lhs <= rhs
        return KeyLemmaReport(2, l, r, u, lhs, rhs, count_ok, distinct, None,
                              count_ok and distinct, detail)

    if case == 3:
        lhs = l * (Q - 2) * comb(r + 1, 3)
        count_ok = lhs <= rhs
        try:
            anchored = [
                pair_point(h, p, g[0], j) for g in groups for j in g[1:]
            ]
            cap = is_cap(anchored)
        except (DependencyError, ValueError) as exc:
            detail = str(exc)
            cap = None
        cap_ok = cap is not None and cap.is_cap and l * r <= m2(u - 1)
        try:
            triples: list[PgPoint] = []
            for g in groups:
                for i, j, k in combinations(g, 3):
                    triples.extend(triple_points(h, p, i, j, k))
            distinct = len(set(triples)) == len(triples)
        except DependencyError as exc:
            detail = str(exc)
            distinct = False
        return KeyLemmaReport(3, l, r, u, lhs, rhs, count_ok, distinct, cap,
                              count_ok and distinct and cap_ok, detail)

    raise ValueError(f"case must be 1, 2 or 3, got {case}")


def keylemma_r5_variant(s: int) -> tuple[int, int, bool]:
    """The bespoke r=5 point count for the distance-6 length-(3s+6) family:
    (s+1)*C(6,2) + 2*C(5,3) + C(5,2) must fit among the 85 points of
    PG(3,4).  Returns (lhs, rhs, ok)."""
    lhs = (s + 1) * comb(6, 2) + (Q - 2) * comb(5, 3) + comb(5, 2)
    rhs = (Q**4 - 1) // 3
    return lhs, rhs, lhs <= rhs


# --- the 13-column forbidden form ------------------------------------------

def _validate_634(m: Gf4Matrix, name: str) -> None:
    if (m.rows, m.cols) != (3, 6):
        raise ValueError(f"{name} must be 3x6, got {m.rows}x{m.cols}")
    if any(m[0, j] != 1 for j in range(6)):
        raise ValueError(f"{name} must have an all-ones first row")
    c = LinearCode(m)
    if c.k != 3 or min_distance(c) != 4:
        raise ValueError(f"{name} is not a parity check of a [6,3,4] code")


def forbidden_form_distance(
    a_tilde: Gf4Matrix, b_tilde: Gf4Matrix, x: Sequence[int]
) -> int:
    """Exact minimum distance of the 4x13 matrix assembled from two [6,3,4]
    parity checks and an extra column (1, x1, x2, x3) with x1 nonzero.

    Any such assembly has minimum distance at most 3 — the extra column is
    always a combination of at most 3 earlier columns.
    """
    _validate_634(a_tilde, "a_tilde")
    _validate_634(b_tilde, "b_tilde")
    xv = tuple(int(v) for v in x)
    if len(xv) != 4:
        raise ValueError("x must have length 4")
    if xv[0] != 1:
        raise ValueError("the extra column must start with 1")
    if xv[1] == 0:
        raise ValueError("x1 must be nonzero")
    rows = [
        [1] * 6 + [0] * 6 + [xv[0]],
        [0] * 6 + [1] * 6 + [xv[1]],
        list(a_tilde.row(1)) + list(b_tilde.row(1)) + [xv[2]],
        list(a_tilde.row(2)) + list(b_tilde.row(2)) + [xv[3]],
    ]
    return min_distance(LinearCode(Gf4Matrix(rows)))


def random_634_parity_check(rng: random.Random) -> Gf4Matrix:
    """A uniform-ish random 3x6 parity check of a [6,3,4] code with all-ones
    first row: sample distinct affine columns until the distance hits 4."""
    while True:
        cols = rng.sample([(1, y, z) for y in range(4) for z in range(4)], 6)
        m = Gf4Matrix([[c[i] for c in cols] for i in range(3)])
        c = LinearCode(m)
        if c.k == 3 and min_distance(c) == 4:
            return m


def random_forbidden_instance(
    rng: random.Random,
) -> tuple[Gf4Matrix, Gf4Matrix, tuple[int, int, int, int]]:
    """A random valid (a_tilde, b_tilde, x) triple for the 13-column form."""
    a = random_634_parity_check(rng)
    b = random_634_parity_check(rng)
    x = (1, rng.choice(NONZERO), rng.randrange(4), rng.randrange(4))
    return a, b, x
