"""The catalog of the 27 optimal quaternary LRC families.

Each class has an id C01..C27 (frozen ordering), parameter ranges, claimed
(n, k, r, d) formulas, and a builder emitting the parity-check matrix and
its locality profile.  Fixed-size families reproduce their display matrices
entry-for-entry; s-parametrized families follow the stated block formulas.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .code import LinearCode, dual, min_distance, shorten
from .errors import RangeError
from .gf4 import MUL_TABLE
from .lrc import LrcProfile, verify_locality_certificate, code_locality
from .matrix import (
    Gf4Matrix,
    delete_cols,
    hstack,
    kron,
    mat_from_text_rows,
    rank,
    rref,
    vstack,
    write_matrix_text,
)

import numpy as np


@dataclass(frozen=True)
class BuiltInstance:
    """One constructed code: matrix, profile, claimed parameters, metadata."""

    class_id: str
    h: Gf4Matrix
    profile: LrcProfile
    claimed: tuple[int, int, int, int]  # (n, k, r, d)
    eq: str
    params: dict = field(default_factory=dict)
    metadata: dict = field(default_factory=dict)

    @property
    def code(self) -> LinearCode:
        return LinearCode(self.h)

    def file_comments(self) -> dict[str, str]:
        out = {"class": self.class_id}
        for key, value in self.params.items():
            out[key] = str(value)
        out["claimed"] = "(%d,%d,%d,%d)" % self.claimed
        out["eq"] = self.eq
        out["locality_rows"] = ",".join(str(i) for i in self.profile.locality_rows)
        out["r"] = str(self.profile.r_claimed)
        for key, value in self.metadata.items():
            out[key] = str(value)
        return out

    def to_text(self) -> str:
        return write_matrix_text(self.h, self.file_comments())


@dataclass(frozen=True)
class BuildRequest:
    class_id: str
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CodeClass:
    """One parameter family: id, formulas, ranges and a builder."""

    id: str
    formula: str       # human-readable (n, k, r) and d formulas
    param_spec: str    # human-readable parameter ranges
    eq_labels: tuple[str, ...]
    builder: Callable[..., BuiltInstance]
    instances: Callable[["EnumerationCaps"], Iterator[dict]]


@dataclass(frozen=True)
class EnumerationCaps:
    """Truncation of the infinite families for sweeps."""

    max_s: int = 5
    exhaustive_options: bool = False


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------

def _ones_row(n: int) -> Gf4Matrix:
    return Gf4Matrix([[1] * n])


def _repeat_groups(count: int, block_rows: list[list[int]]) -> Gf4Matrix:
    """(1 ... 1)_count kron block."""
    return kron(_ones_row(count), Gf4Matrix(block_rows))


def _disjoint_groups(count: int, row: list[int]) -> Gf4Matrix:
    """I_count kron a single row."""
    return kron(Gf4Matrix.identity(count), Gf4Matrix([row]))


def _literal(text: str) -> Gf4Matrix:
    return mat_from_text_rows(text)


def _require(cond: bool, class_id: str, msg: str) -> None:
    if not cond:
        raise RangeError(f"{class_id}: {msg}")


def _zeros(rows: int, cols: int) -> Gf4Matrix:
    return Gf4Matrix.zeros(rows, cols)


def _instance(class_id, h, locality_rows, r, claimed, eq, params, **metadata):
    profile = LrcProfile.build(h, locality_rows, r)
    return BuiltInstance(
        class_id=class_id,
        h=h,
        profile=profile,
        claimed=claimed,
        eq=eq,
        params=dict(params),
        metadata=metadata,
    )


# ---------------------------------------------------------------------------
# d = 2 family
# ---------------------------------------------------------------------------

def build_c01(k: int, r: int, variant: str = "plain") -> BuiltInstance:
    """(k + ceil(k/r), k, r), d = 2.

    r | k: block-diagonal repetition rows.  r does not divide k: start from
    the ceil(k/r)-group form and delete the last r-t columns ("plain"); the
    "low" variant additionally turns one zero of the last row into a one,
    keeping all row weights at most r+1.
    """
    _require(r >= 1 and k > r, "C01", f"requires k > r >= 1, got k={k}, r={r}")
    _require(variant in ("plain", "low"), "C01", f"unknown variant {variant!r}")
    groups = -(-k // r)  # ceil(k/r)
    t = k - (groups - 1) * r
    h_full = _disjoint_groups(groups, [1] * (r + 1))
    if k % r == 0:
        _require(variant == "plain", "C01", "variant 'low' needs r not dividing k")
        h = h_full
    else:
        drop = list(range(h_full.cols - (r - t), h_full.cols))
        h = delete_cols(h_full, drop)
        if variant == "low":
            arr = h.array.copy()
            arr[groups - 1, r] = 1
            h = Gf4Matrix(arr)
    n = k + groups
    return _instance(
        "C01", h, list(range(groups)), r, (n, k, r, 2),
        "pcm_d2" if k % r == 0 else ("H_notlow" if variant == "plain" else "H_low"),
        {"k": k, "r": r, "variant": variant},
    )


# ---------------------------------------------------------------------------
# d = 3 families
# ---------------------------------------------------------------------------

def build_c02(s: int) -> BuiltInstance:
    """(3s+3, 2s+1, 2), d = 3."""
    _require(s >= 2, "C02", f"requires s >= 2, got s={s}")
    h = vstack([
        _disjoint_groups(s + 1, [1, 1, 1]),
        _repeat_groups(s + 1, [[0, 1, 2]]),
    ])
    return _instance("C02", h, list(range(s + 1)), 2,
                     (3 * s + 3, 2 * s + 1, 2, 3), "3s+3", {"s": s})


def build_c03(s: int, alpha: int = 0) -> BuiltInstance:
    """(4s+3, 3s+1, 3), d = 3; alpha is 0 or 1."""
    _require(s >= 2, "C03", f"requires s >= 2, got s={s}")
    _require(alpha in (0, 1), "C03", f"alpha must be 0 or 1, got {alpha}")
    top = hstack([
        Gf4Matrix([[1, 1, 1, alpha, 0, 0, 0], [0, 0, 0, 1, 1, 1, 1]]),
        _zeros(2, 4 * (s - 1)),
    ])
    mid = hstack([
        _zeros(s - 1, 7),
        _disjoint_groups(s - 1, [1, 1, 1, 1]),
    ])
    bottom = hstack([
        Gf4Matrix([[0, 2, 3, 1, 0, 2, 3]]),
        _repeat_groups(s - 1, [[1, 0, 2, 3]]),
    ])
    h = vstack([top, mid, bottom])
    return _instance("C03", h, list(range(s + 1)), 3,
                     (4 * s + 3, 3 * s + 1, 3, 3), "4s+3_2",
                     {"s": s, "alpha": alpha})


_C04 = {
    2: """
        1 1 1 1 1 0 0 0 0 0 0 0 0
        0 0 0 0 1 1 1 1 1 0 0 0 0
        0 0 0 0 0 0 0 0 1 1 1 1 1
        0 1 w W 0 1 w W 0 0 1 w W
    """,
    3: """
        1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0
        0 0 0 0 1 1 1 1 1 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 0 0 0 0 1 1 1 1 1 0 0 0 0
        0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1
        0 1 w W 0 0 1 w W 0 1 w W 0 0 1 w W
    """,
}


def build_c04(s: int) -> BuiltInstance:
    """(5s+3, 4s+1, 4), d = 3; s in {2, 3}."""
    _require(s in (2, 3), "C04", f"requires s in {{2,3}}, got s={s}")
    h = _literal(_C04[s])
    return _instance("C04", h, list(range(s + 1)), 4,
                     (5 * s + 3, 4 * s + 1, 4, 3), "5s+3", {"s": s})


_C05 = """
    1 1 1 1 1 1 0 0 0 0 0 0 0 0 0
    0 0 0 0 0 1 1 1 1 1 1 0 0 0 0
    0 0 0 0 1 0 0 0 0 0 1 1 1 1 1
    0 1 w W 0 1 0 1 w W 1 0 1 w W
"""


def build_c05(s: int = 2) -> BuiltInstance:
    """(6s+3, 5s+1, 5), d = 3; s = 2."""
    _require(s == 2, "C05", f"requires s = 2, got s={s}")
    h = _literal(_C05)
    return _instance("C05", h, [0, 1, 2], 5, (15, 11, 5, 3), "6s+3", {"s": s})


def build_c06(s: int) -> BuiltInstance:
    """(4s+4, 3s+2, 3), d = 3."""
    _require(s >= 2, "C06", f"requires s >= 2, got s={s}")
    h = vstack([
        _disjoint_groups(s + 1, [1, 1, 1, 1]),
        _repeat_groups(s + 1, [[0, 1, 2, 3]]),
    ])
    return _instance("C06", h, list(range(s + 1)), 3,
                     (4 * s + 4, 3 * s + 2, 3, 3), "4s+4", {"s": s})


_C07_BASE = """
    1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0
    1 1 1 w w w W W W W w 1 0 0 0 0 1 1 1
    1 w W 1 w W 1 w W 0 0 0 W 0 w 1 w 1 0
"""

_C08_BASE = """
    1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0
    1 1 1 w w w W W W W w 1 0 0 0 0 1 1 1 1
    1 w W 1 w W 1 w W 0 0 0 W 0 w 1 W w 1 0
"""

_C09_BASE = """
    1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 0 0 0 0 0
    1 1 1 w w w W W W W w 0 0 0 0 1 0 1 1 1 1
    1 w W 1 w W 1 w W 0 0 W 0 w 1 0 1 W w 1 0
"""


def _punctured_front(base_text, class_id, eq, r_lo, r_hi, extra, locality_rows):
    def build(r: int) -> BuiltInstance:
        _require(r_lo <= r <= r_hi, class_id,
                 f"requires {r_lo} <= r <= {r_hi}, got r={r}")
        base = _literal(base_text)
        p = r_hi - r
        h = delete_cols(base, range(p)) if p else base
        n = base.cols - p
        return _instance(class_id, h, locality_rows, r,
                         (n, r + extra - 3, r, 3), eq,
                         {"r": r}, punctured_front=p)
    return build


# n = r + 4, k = r + 1: puncture the first 0..13 columns of the 19-column base
build_c07 = _punctured_front(_C07_BASE, "C07", "pcm_hamming_code_1_3", 2, 15, 4, [0, 1])
# n = r + 5, k = r + 2: puncture the first 0..12 columns of the 20-column base
build_c08 = _punctured_front(_C08_BASE, "C08", "pcm_hamming_code_1_4", 3, 15, 5, [0, 1])
# n = r + 6, k = r + 3: puncture the first 0..9 columns; all 3 rows are locality rows
build_c09 = _punctured_front(_C09_BASE, "C09", "pcm_hamming_5", 6, 15, 6, [0, 1, 2])


# ---------------------------------------------------------------------------
# d = 4 families
# ---------------------------------------------------------------------------

def build_c10(s: int) -> BuiltInstance:
    """(4s+4, 3s+1, 3), d = 4."""
    _require(s >= 2, "C10", f"requires s >= 2, got s={s}")
    h = vstack([
        _disjoint_groups(s + 1, [1, 1, 1, 1]),
        _repeat_groups(s + 1, [[0, 1, 0, 1], [0, 0, 1, 1]]),
    ])
    return _instance("C10", h, list(range(s + 1)), 3,
                     (4 * s + 4, 3 * s + 1, 3, 4), "4s+4_3s+1", {"s": s})


def build_c11(s: int, alpha: int = 0) -> BuiltInstance:
    """(5s+4, 4s+1, 4), d = 4; alpha is 0 or 1."""
    _require(s >= 2, "C11", f"requires s >= 2, got s={s}")
    _require(alpha in (0, 1), "C11", f"alpha must be 0 or 1, got {alpha}")
    top = hstack([
        Gf4Matrix([[1, 1, 1, 1, alpha, 0, 0, 0, 0],
                   [0, 0, 0, 0, 1, 1, 1, 1, 1]]),
        _zeros(2, 5 * (s - 1)),
    ])
    mid = hstack([
        _zeros(s - 1, 9),
        _disjoint_groups(s - 1, [1, 1, 1, 1, 1]),
    ])
    bottom = hstack([
        Gf4Matrix([[0, 1, 0, 3, 3, 3, 0, 1, 0],
                   [0, 0, 1, 3, 1, 3, 1, 0, 0]]),
        _repeat_groups(s - 1, [[0, 1, 0, 3, 3], [0, 0, 1, 3, 1]]),
    ])
    h = vstack([top, mid, bottom])
    return _instance("C11", h, list(range(s + 1)), 4,
                     (5 * s + 4, 4 * s + 1, 4, 4), "5s+4_4s+1",
                     {"s": s, "alpha": alpha})


def _c12_v2_blocks(alpha: int, beta: int) -> tuple[Gf4Matrix, Gf4Matrix]:
    a = Gf4Matrix([
        [1, 1, 1, 1, 1, alpha, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 1, 1, 1, 1, 1, beta, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    ])
    b = Gf4Matrix([
        [0, 1, 0, 3, 3, 1, 3, 3, 0, 1, 1, 1, 2, 2, 3, 3],
        [0, 0, 1, 3, 1, 3, 1, 3, 1, 0, 0, 3, 0, 2, 3, 2],
    ])
    return a, b


def build_c12(s: int, alpha: int = 0, beta: int = 0, variant: int = 1) -> BuiltInstance:
    """(6s+4, 5s+1, 5), d = 4; (alpha, beta) in {0,1}^2; three matrix shapes
    (variant 2 exists only at s=2, variant 3 only at s>=3)."""
    _require(s >= 2, "C12", f"requires s >= 2, got s={s}")
    _require(alpha in (0, 1) and beta in (0, 1), "C12",
             f"alpha, beta must be 0 or 1, got ({alpha},{beta})")
    _require(variant in (1, 2, 3), "C12", f"variant must be 1, 2 or 3, got {variant}")
    if variant == 1:
        top = hstack([
            Gf4Matrix([[1, 1, 1, 1, alpha, beta, 0, 0, 0, 0],
                       [0, 0, 0, 0, 1, 1, 1, 1, 1, 1]]),
            _zeros(2, 6 * (s - 1)),
        ])
        mid = hstack([
            _zeros(s - 1, 10),
            _disjoint_groups(s - 1, [1] * 6),
        ])
        bottom = hstack([
            Gf4Matrix([[0, 1, 0, 3, 3, 1, 3, 0, 1, 0],
                       [0, 0, 1, 3, 1, 3, 3, 1, 0, 0]]),
            _repeat_groups(s - 1, [[0, 1, 0, 3, 1, 3], [0, 0, 1, 3, 3, 1]]),
        ])
        h = vstack([top, mid, bottom])
        eq = "6s+4_5s+1_1"
    elif variant == 2:
        _require(s == 2, "C12", "variant 2 exists only at s = 2")
        a, b = _c12_v2_blocks(alpha, beta)
        h = vstack([a, b])
        eq = "6s+4_5s+1_2"
    else:
        _require(s >= 3, "C12", "variant 3 requires s >= 3")
        a, b = _c12_v2_blocks(alpha, beta)
        top = hstack([a, _zeros(3, 6 * (s - 2))])
        mid = hstack([
            _zeros(s - 2, 16),
            _disjoint_groups(s - 2, [1] * 6),
        ])
        bottom = hstack([
            b,
            _repeat_groups(s - 2, [[0, 1, 0, 3, 1, 3], [0, 0, 1, 3, 3, 1]]),
        ])
        h = vstack([top, mid, bottom])
        eq = "6s+4_5s+1_3"
    return _instance("C12", h, list(range(s + 1)), 5,
                     (6 * s + 4, 5 * s + 1, 5, 4), eq,
                     {"s": s, "alpha": alpha, "beta": beta, "variant": variant})


_C13 = {
    2: """
        1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 0 1 1 1 1 1 1 1 0 0 0 0 0
        0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1
        0 1 0 W W 1 1 1 1 w W 0 W 0 1 0 W W
        0 0 1 W 1 W 0 W w 0 0 0 W 0 0 1 W 1
    """,
    3: """
        1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 0 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 1 0 0 0 0 0 0 0 1 1 1 1 1 1 0 0 0 0 0 0
        0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1
        1 1 w w 0 0 0 0 1 0 W W 1 1 1 w w 0 0 0 1 0 W W 1
        0 W 0 1 W w 1 0 0 1 W 1 W 0 W 0 1 W 1 0 0 1 W 1 W
    """,
}


def build_c13(s: int) -> BuiltInstance:
    """(7s+4, 6s+1, 6), d = 4; s in {2, 3}."""
    _require(s in (2, 3), "C13", f"requires s in {{2,3}}, got s={s}")
    h = _literal(_C13[s])
    return _instance("C13", h, list(range(s + 1)), 6,
                     (7 * s + 4, 6 * s + 1, 6, 4), "7s+4", {"s": s})


_C14 = """
    1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0
    0 0 0 0 0 0 1 1 1 1 1 1 1 1 0 0 0 0 0 0
    0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1 1
    0 1 0 W W 1 1 1 1 1 W W 1 W 0 1 0 W W 1
    0 0 1 W 1 W 0 1 W w 0 1 0 W 0 0 1 W 1 W
"""


def build_c14(s: int = 2) -> BuiltInstance:
    """(8s+4, 7s+1, 7), d = 4; s = 2."""
    _require(s == 2, "C14", f"requires s = 2, got s={s}")
    h = _literal(_C14)
    return _instance("C14", h, [0, 1, 2], 7, (20, 15, 7, 4), "8s+4", {"s": s})


def build_c15(s: int) -> BuiltInstance:
    """(5s+5, 4s+2, 4), d = 4."""
    _require(s >= 2, "C15", f"requires s >= 2, got s={s}")
    h = vstack([
        _disjoint_groups(s + 1, [1] * 5),
        _repeat_groups(s + 1, [[0, 1, 0, 3, 3], [0, 0, 1, 3, 1]]),
    ])
    return _instance("C15", h, list(range(s + 1)), 4,
                     (5 * s + 5, 4 * s + 2, 4, 4), "5s+5_4s+2", {"s": s})


def build_c16(s: int, alpha: int = 0) -> BuiltInstance:
    """(6s+5, 5s+2, 5), d = 4; alpha is 0 or 1."""
    _require(s >= 2, "C16", f"requires s >= 2, got s={s}")
    _require(alpha in (0, 1), "C16", f"alpha must be 0 or 1, got {alpha}")
    top = hstack([
        Gf4Matrix([[1, 1, 1, 1, 1, alpha, 0, 0, 0, 0, 0],
                   [0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1]]),
        _zeros(2, 6 * (s - 1)),
    ])
    mid = hstack([
        _zeros(s - 1, 11),
        _disjoint_groups(s - 1, [1] * 6),
    ])
    bottom = hstack([
        Gf4Matrix([[0, 1, 0, 3, 3, 1, 3, 3, 0, 1, 0],
                   [0, 0, 1, 3, 1, 3, 1, 3, 1, 0, 0]]),
        _repeat_groups(s - 1, [[0, 1, 0, 1, 3, 3], [0, 0, 1, 3, 3, 1]]),
    ])
    h = vstack([top, mid, bottom])
    return _instance("C16", h, list(range(s + 1)), 5,
                     (6 * s + 5, 5 * s + 2, 5, 4), "6s+5_5s+2",
                     {"s": s, "alpha": alpha})


_C17 = """
    1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0
    0 0 0 0 0 0 1 1 1 1 1 1 1 0 0 0 0 0 0
    0 0 0 0 0 0 0 0 0 0 0 0 1 1 1 1 1 1 1
    0 1 0 W W 1 W 1 W W w 1 W 0 1 0 W W 1
    0 0 1 W 1 W 1 w W w W 1 1 0 0 1 W 1 W
"""


def build_c17(s: int = 2) -> BuiltInstance:
    """(7s+5, 6s+2, 6), d = 4; s = 2."""
    _require(s == 2, "C17", f"requires s = 2, got s={s}")
    h = _literal(_C17)
    return _instance("C17", h, [0, 1, 2], 6, (19, 14, 6, 4), "7s+5", {"s": s})


def build_c18(s: int) -> BuiltInstance:
    """(6s+6, 5s+3, 5), d = 4."""
    _require(s >= 2, "C18", f"requires s >= 2, got s={s}")
    h = vstack([
        _disjoint_groups(s + 1, [1] * 6),
        _repeat_groups(s + 1, [[0, 1, 0, 3, 3, 1], [0, 0, 1, 3, 1, 3]]),
    ])
    return _instance("C18", h, list(range(s + 1)), 5,
                     (6 * s + 6, 5 * s + 3, 5, 4), "6s+6_5s+3", {"s": s})


def build_c19(s: int) -> BuiltInstance:
    """(2s+2, s, 1), d = 4."""
    _require(s >= 2, "C19", f"requires s >= 2, got s={s}")
    h = vstack([
        _disjoint_groups(s + 1, [1, 1]),
        _repeat_groups(s + 1, [[0, 1]]),
    ])
    return _instance("C19", h, list(range(s + 1)), 1,
                     (2 * s + 2, s, 1, 4), "2s+2_s", {"s": s})


_C20 = """
    1 1 1 0 0 0 0 W w 1 w W W 1 W 1
    0 0 1 1 1 0 0 w W w w 0 w w W W
    0 0 0 0 1 1 1 w w W W W w 1 1 w
    W w 1 0 1 w W 1 1 1 1 1 w 1 W w
"""

_C21 = """
    1 1 1 1 0 0 0 0 0 w 1 W W W w w W
    0 0 0 1 1 1 1 0 0 w 1 1 w 1 W 1 w
    0 0 1 0 0 0 1 1 1 W w w w W w 1 1
    1 w 0 1 1 w 0 0 W 1 w w w W 0 0 1
"""

_C22 = """
    1 1 1 1 1 1 0 0 0 0 0 0 1 w
    0 0 0 0 1 1 1 1 1 1 0 0 1 w
    1 1 0 0 0 0 1 1 0 0 1 1 1 w
    1 w 1 w 1 w 1 w 1 w 1 w w w
"""


def _punctured_back(base_text, class_id, eq, r_lo, r_hi, extra, locality_rows):
    def build(r: int) -> BuiltInstance:
        _require(r_lo <= r <= r_hi, class_id,
                 f"requires {r_lo} <= r <= {r_hi}, got r={r}")
        base = _literal(base_text)
        p = r_hi - r
        h = delete_cols(base, range(base.cols - p, base.cols)) if p else base
        n = base.cols - p
        return _instance(class_id, h, locality_rows, r,
                         (n, r + extra - 4, r, 4), eq,
                         {"r": r}, punctured_back=p)
    return build


# n = r + 5, k = r + 1: puncture the last 0..9 columns of the 16-column base
build_c20 = _punctured_back(_C20, "C20", "r+5_r+1", 2, 11, 5, [0, 1, 2])
# n = r + 6, k = r + 2: puncture the last 0..8 columns of the 17-column base
build_c21 = _punctured_back(_C21, "C21", "r+6_r+2", 3, 11, 6, [0, 1, 2])
# n = r + 7, k = r + 3: puncture the last 0..2 columns of the 14-column base
build_c22 = _punctured_back(_C22, "C22", "r+7_r+3", 5, 7, 7, [0, 1, 2])


# (2r+6, 2r+1, r), d = 4: one explicit matrix per r.  The r=4 display as
# printed has a weight-6 fourth row; entry (3, 6) is zeroed here, which is
# the unique single-entry change restoring row weight r+1, the locality
# certificate and d = 4 (the printed matrix has d = 4 but no valid
# certificate; the other candidate corrections collapse d to 2).
_C23 = {
    2: """
        1 1 1 0 0 0 0 0 0 0
        0 0 1 1 1 0 0 0 0 0
        0 0 0 0 0 1 1 1 0 0
        0 0 0 0 0 0 0 1 1 1
        1 w 1 1 w 1 w 1 1 w
    """,
    3: """
        1 1 1 1 0 0 0 0 0 0 0 0
        0 0 1 1 1 1 0 0 0 0 0 0
        0 0 0 0 0 0 1 1 1 1 0 0
        0 0 0 0 0 0 0 0 1 1 1 1
        1 w 1 w 1 w 1 w 1 w 1 w
    """,
    4: """
        1 1 1 1 1 0 0 0 0 0 0 0 0 0
        0 0 0 1 1 1 1 1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0 1 1 1 1 0 0
        0 0 0 0 0 1 0 0 0 0 1 1 1 1
        1 1 w 1 w 1 w 1 1 w 1 w 1 w
    """,
    5: """
        1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0
        0 0 0 0 1 1 1 1 1 1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0 1 0 1 1 1 1 0 0
        0 1 0 0 0 0 0 0 0 1 0 0 1 1 1 1
        1 1 1 w 1 w 1 w 1 1 1 w 1 w 1 w
    """,
    6: """
        1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 1 1 1 1 1 1 1 0 0 0 0 0 0
        1 0 1 0 0 0 0 0 0 0 1 0 1 1 1 1 0 0
        0 1 0 0 0 0 0 0 0 1 0 1 0 0 1 1 1 1
        1 1 w 1 w 1 w 1 w 1 1 w 1 w 1 w 1 w
    """,
    7: """
        1 1 1 1 1 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 0 1 1 1 1 1 1 1 1 0 0 0 0 0 0
        1 0 1 0 0 0 0 0 0 0 1 0 1 0 1 1 1 1 0 0
        0 1 0 1 0 0 0 0 0 0 0 1 0 1 0 0 1 1 1 1
        1 1 w w 1 w 1 w 1 w 1 1 w w 1 w 1 w 1 w
    """,
}

_C23_EQ = {2: "2r+6_2r+1_1", 3: "2r+6_2r+1_1", 4: "2r+6_2r+1_2",
           5: "2r+6_2r+1_2", 6: "2r+6_2r+1_3", 7: "2r+6_2r+1_4"}


def build_c23(r: int) -> BuiltInstance:
    """(2r+6, 2r+1, r), d = 4; 2 <= r <= 7."""
    _require(2 <= r <= 7, "C23", f"requires 2 <= r <= 7, got r={r}")
    h = _literal(_C23[r])
    return _instance("C23", h, [0, 1, 2, 3], r,
                     (2 * r + 6, 2 * r + 1, r, 4), _C23_EQ[r], {"r": r})


# ---------------------------------------------------------------------------
# d in {6, 8} families with locality 1
# ---------------------------------------------------------------------------

_C24 = {
    2: """
        1 1 0 0 0 0 0 0
        0 0 1 1 0 0 0 0
        0 0 0 0 1 1 0 0
        0 0 0 0 0 0 1 1
        0 1 0 1 0 1 0 0
        0 w 0 1 0 0 0 1
    """,
    3: """
        1 1 0 0 0 0 0 0 0 0
        0 0 1 1 0 0 0 0 0 0
        0 0 0 0 1 1 0 0 0 0
        0 0 0 0 0 0 1 1 0 0
        0 0 0 0 0 0 0 0 1 1
        0 1 0 1 0 w 0 w 0 0
        0 w 0 1 0 1 0 0 0 1
    """,
}

_C25 = {
    2: """
        1 1 0 0 0 0 0 0 0 0
        0 0 1 1 0 0 0 0 0 0
        0 0 0 0 1 1 0 0 0 0
        0 0 0 0 0 0 1 1 0 0
        0 0 0 0 0 0 0 0 1 1
        0 1 0 1 0 w 0 w 0 0
        0 w 0 1 0 1 0 0 0 1
        0 0 0 1 0 0 0 w 0 1
    """,
    3: """
        1 1 0 0 0 0 0 0 0 0 0 0
        0 0 1 1 0 0 0 0 0 0 0 0
        0 0 0 0 1 1 0 0 0 0 0 0
        0 0 0 0 0 0 1 1 0 0 0 0
        0 0 0 0 0 0 0 0 1 1 0 0
        0 0 0 0 0 0 0 0 0 0 1 1
        0 1 0 1 0 w 0 w 0 0 0 0
        0 w 0 1 0 1 0 0 0 1 0 0
        0 0 0 1 0 0 0 w 0 1 0 1
    """,
}


def build_c24(k: int) -> BuiltInstance:
    """(2k+4, k, 1), d = 6; k in {2, 3}."""
    _require(k in (2, 3), "C24", f"requires k in {{2,3}}, got k={k}")
    h = _literal(_C24[k])
    return _instance("C24", h, list(range(k + 2)), 1,
                     (2 * k + 4, k, 1, 6), "2k+4", {"k": k})


def build_c25(k: int) -> BuiltInstance:
    """(2k+6, k, 1), d = 8; k in {2, 3}."""
    _require(k in (2, 3), "C25", f"requires k in {{2,3}}, got k={k}")
    h = _literal(_C25[k])
    return _instance("C25", h, list(range(k + 3)), 1,
                     (2 * k + 6, k, 1, 8), "2k+6", {"k": k})


# ---------------------------------------------------------------------------
# near-MDS family (n, k, k-1) with d = n - k
# ---------------------------------------------------------------------------

_C26_BASE = """
    1 1 1 1 1 1 0 0 0 0 0 0
    0 0 0 0 0 0 1 1 1 1 1 1
    0 1 0 0 w 1 0 0 1 0 1 W
    0 0 W 0 1 0 0 0 1 w 1 w
    0 0 0 W w W 0 0 W W 0 1
    0 0 0 0 w w 0 W W 1 w w
"""


def _classical_puncture(c: LinearCode, cols) -> LinearCode:
    """Codeword-deleting puncture: drop coordinates from every codeword
    (realized as the dual of shortening the dual)."""
    return dual(shorten(dual(c), cols))


def _dual_words(c: LinearCode) -> list[tuple[int, ...]]:
    """All nonzero dual codewords (n - k <= 9 assumed), sorted."""
    red, piv = rref(c.parity_check)
    basis = red.array[: len(piv), :]
    words = [np.zeros(c.n, dtype=np.uint8)]
    for i in range(basis.shape[0]):
        g = basis[i]
        words = [w ^ MUL_TABLE[v, g] for v in range(4) for w in words]
    return sorted(
        tuple(int(x) for x in w) for w in words if w.any()
    )


def _rebuild_with_locality_rows(c: LinearCode, r: int) -> Optional[tuple[Gf4Matrix, list[int]]]:
    """Reassemble a parity-check matrix whose leading rows are a greedy
    cover of all coordinates by dual words of weight <= r+1, completed to
    full rank with canonical basis rows.  None if no cover exists."""
    chosen: list[tuple[int, ...]] = []
    covered: set[int] = set()
    for w in _dual_words(c):
        weight = sum(1 for x in w if x)
        if not 2 <= weight <= r + 1:
            continue
        supp = {j for j, x in enumerate(w) if x}
        if supp - covered:
            chosen.append(w)
            covered |= supp
        if len(covered) == c.n:
            break
    if len(covered) != c.n:
        return None
    rows = [list(w) for w in chosen]
    locality_rows = list(range(len(rows)))
    red, piv = rref(c.parity_check)
    rk = rank(Gf4Matrix(rows))
    for i in range(len(piv)):
        if rk == c.n - c.k:
            break
        cand = rows + [list(int(x) for x in red.array[i])]
        if rank(Gf4Matrix(cand)) > rk:
            rows = cand
            rk += 1
    return Gf4Matrix(rows), locality_rows


def build_c26(k: int, n: int) -> BuiltInstance:
    """(n, k, k-1), d = n - k; 3 <= k <= 6 and 5 <= n - k <= 6.

    The (12, 6) point is the displayed matrix; every other point is reached
    from it by deterministically searched puncture/shorten witnesses, with
    the locality rows rebuilt from low-weight dual codewords.
    """
    _require(3 <= k <= 6, "C26", f"requires 3 <= k <= 6, got k={k}")
    _require(5 <= n - k <= 6, "C26", f"requires 5 <= n - k <= 6, got (n,k)=({n},{k})")
    base = _literal(_C26_BASE)
    if (n, k) == (12, 6):
        return _instance("C26", base, [0, 1], 5, (12, 6, 5, 6), "near_mds", {"k": k, "n": n})
    d_target = n - k
    c0 = LinearCode(base)
    n_punc = 6 - d_target
    n_short = 6 - k
    for punc in itertools.combinations(range(12), n_punc):
        cp = _classical_puncture(c0, punc) if punc else c0
        for short_cols in itertools.combinations(range(cp.n), n_short):
            cs = shorten(cp, short_cols) if short_cols else cp
            if cs.k != k or min_distance(cs) != d_target:
                continue
            rebuilt = _rebuild_with_locality_rows(cs, k - 1)
            if rebuilt is None:
                continue
            h, locality_rows = rebuilt
            c2 = LinearCode(h)
            profile = LrcProfile.build(h, locality_rows, k - 1)
            if not verify_locality_certificate(c2, profile):
                continue
            if code_locality(c2) != k - 1 or min_distance(c2) != d_target:
                continue
            return _instance(
                "C26", h, locality_rows, k - 1, (n, k, k - 1, d_target),
                "near_mds", {"k": k, "n": n},
                punctured=",".join(map(str, punc)) or "-",
                shortened=",".join(map(str, short_cols)) or "-",
            )
    raise RangeError(f"C26: no witness found for (n,k)=({n},{k})")


# ---------------------------------------------------------------------------
# d = 6 locality-2 family
# ---------------------------------------------------------------------------

_C27 = {
    2: """
        1 1 1 0 0 0 0 0 0 0 0 0
        0 0 0 1 1 1 0 0 0 0 0 0
        0 0 0 0 0 0 1 1 1 0 0 0
        0 0 0 0 0 0 0 0 0 1 1 1
        0 W 1 0 W 1 0 W 1 0 0 0
        0 0 w 0 w w 0 w 0 0 1 0
        0 1 1 0 1 0 0 W 0 0 0 1
    """,
    3: """
        1 1 1 0 0 0 0 0 0 0 0 0 0 0 0
        0 0 0 1 1 1 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 0 1 1 1 0 0 0 0 0 0
        0 0 0 0 0 0 0 0 0 1 1 1 0 0 0
        0 0 0 0 0 0 0 0 0 0 0 0 1 1 1
        0 W 1 0 W 1 0 W 1 0 0 0 0 1 w
        0 0 w 0 w w 0 w 0 0 1 0 0 0 W
        0 1 1 0 1 0 0 W 0 0 0 1 0 1 W
    """,
}


def build_c27(s: int) -> BuiltInstance:
    """(3s+6, 2s+1, 2), d = 6; s in {2, 3}."""
    _require(s in (2, 3), "C27", f"requires s in {{2,3}}, got s={s}")
    h = _literal(_C27[s])
    return _instance("C27", h, list(range(s + 2)), 2,
                     (3 * s + 6, 2 * s + 1, 2, 6), f"3s+6_{s - 1}", {"s": s})


# ---------------------------------------------------------------------------
# catalog and enumeration
# ---------------------------------------------------------------------------

def _s_range(lo: int):
    def gen(caps: EnumerationCaps):
        for s in range(lo, caps.max_s + 1):
            yield {"s": s}
    return gen


def _fixed(dicts: list[dict]):
    def gen(caps: EnumerationCaps):
        yield from dicts
    return gen


def _with_alpha(lo: int):
    def gen(caps: EnumerationCaps):
        for s in range(lo, caps.max_s + 1):
            for alpha in (0, 1):
                yield {"s": s, "alpha": alpha}
    return gen


def _c01_params(caps: EnumerationCaps):
    for r in range(1, caps.max_s + 1):
        for k in range(r + 1, r * caps.max_s + 1):
            yield {"k": k, "r": r, "variant": "plain"}
            if k % r != 0:
                yield {"k": k, "r": r, "variant": "low"}


def _c12_params(caps: EnumerationCaps):
    for s in range(2, caps.max_s + 1):
        variants = (1, 2) if s == 2 else (1, 3)
        for variant in variants:
            for alpha in (0, 1):
                for beta in (0, 1):
                    yield {"s": s, "alpha": alpha, "beta": beta, "variant": variant}


def _r_sampled(lo: int, hi: int):
    """r-range streams: endpoints + midpoint by default, all values in
    exhaustive mode."""
    def gen(caps: EnumerationCaps):
        if caps.exhaustive_options:
            values = range(lo, hi + 1)
        else:
            values = sorted({lo, (lo + hi) // 2, hi})
        for r in values:
            yield {"r": r}
    return gen


def _c26_params(caps: EnumerationCaps):
    for k in range(3, 7):
        for delta in (5, 6):
            yield {"k": k, "n": k + delta}


_CATALOG: list[CodeClass] = [
    CodeClass("C01", "(k+ceil(k/r), k, r), d=2", "k > r >= 1",
              ("pcm_d2", "H_notlow", "H_low"), build_c01, _c01_params),
    CodeClass("C02", "(3s+3, 2s+1, 2), d=3", "s >= 2", ("3s+3",),
              build_c02, _s_range(2)),
    CodeClass("C03", "(4s+3, 3s+1, 3), d=3", "s >= 2; alpha in {0,1}",
              ("4s+3_2",), build_c03, _with_alpha(2)),
    CodeClass("C04", "(5s+3, 4s+1, 4), d=3", "s in {2,3}", ("5s+3",),
              build_c04, _fixed([{"s": 2}, {"s": 3}])),
    CodeClass("C05", "(6s+3, 5s+1, 5), d=3", "s = 2", ("6s+3",),
              build_c05, _fixed([{"s": 2}])),
    CodeClass("C06", "(4s+4, 3s+2, 3), d=3", "s >= 2", ("4s+4",),
              build_c06, _s_range(2)),
    CodeClass("C07", "(r+4, r+1, r), d=3", "2 <= r <= 15",
              ("pcm_hamming_code_1_3",), build_c07, _r_sampled(2, 15)),
    CodeClass("C08", "(r+5, r+2, r), d=3", "3 <= r <= 15",
              ("pcm_hamming_code_1_4",), build_c08, _r_sampled(3, 15)),
    CodeClass("C09", "(r+6, r+3, r), d=3", "6 <= r <= 15",
              ("pcm_hamming_5",), build_c09, _r_sampled(6, 15)),
    CodeClass("C10", "(4s+4, 3s+1, 3), d=4", "s >= 2", ("4s+4_3s+1",),
              build_c10, _s_range(2)),
    CodeClass("C11", "(5s+4, 4s+1, 4), d=4", "s >= 2; alpha in {0,1}",
              ("5s+4_4s+1",), build_c11, _with_alpha(2)),
    CodeClass("C12", "(6s+4, 5s+1, 5), d=4",
              "s >= 2; alpha, beta in {0,1}; variants 1|2(s=2)|3(s>=3)",
              ("6s+4_5s+1_1", "6s+4_5s+1_2", "6s+4_5s+1_3"),
              build_c12, _c12_params),
    CodeClass("C13", "(7s+4, 6s+1, 6), d=4", "s in {2,3}", ("7s+4",),
              build_c13, _fixed([{"s": 2}, {"s": 3}])),
    CodeClass("C14", "(8s+4, 7s+1, 7), d=4", "s = 2", ("8s+4",),
              build_c14, _fixed([{"s": 2}])),
    CodeClass("C15", "(5s+5, 4s+2, 4), d=4", "s >= 2", ("5s+5_4s+2",),
              build_c15, _s_range(2)),
    CodeClass("C16", "(6s+5, 5s+2, 5), d=4", "s >= 2; alpha in {0,1}",
              ("6s+5_5s+2",), build_c16, _with_alpha(2)),
    CodeClass("C17", "(7s+5, 6s+2, 6), d=4", "s = 2", ("7s+5",),
              build_c17, _fixed([{"s": 2}])),
    CodeClass("C18", "(6s+6, 5s+3, 5), d=4", "s >= 2", ("6s+6_5s+3",),
              build_c18, _s_range(2)),
    CodeClass("C19", "(2s+2, s, 1), d=4", "s >= 2", ("2s+2_s",),
              build_c19, _s_range(2)),
    CodeClass("C20", "(r+5, r+1, r), d=4", "2 <= r <= 11", ("r+5_r+1",),
              build_c20, _r_sampled(2, 11)),
    CodeClass("C21", "(r+6, r+2, r), d=4", "3 <= r <= 11", ("r+6_r+2",),
              build_c21, _r_sampled(3, 11)),
    CodeClass("C22", "(r+7, r+3, r), d=4", "5 <= r <= 7", ("r+7_r+3",),
              build_c22, _r_sampled(5, 7)),
    CodeClass("C23", "(2r+6, 2r+1, r), d=4", "2 <= r <= 7",
              ("2r+6_2r+1_1", "2r+6_2r+1_2", "2r+6_2r+1_3", "2r+6_2r+1_4"),
              build_c23, _fixed([{"r": r} for r in range(2, 8)])),
    CodeClass("C24", "(2k+4, k, 1), d=6", "k in {2,3}", ("2k+4",),
              build_c24, _fixed([{"k": 2}, {"k": 3}])),
    CodeClass("C25", "(2k+6, k, 1), d=8", "k in {2,3}", ("2k+6",),
              build_c25, _fixed([{"k": 2}, {"k": 3}])),
    CodeClass("C26", "(n, k, k-1), d=n-k", "3 <= k <= 6; 5 <= n-k <= 6",
              ("near_mds",), build_c26, _c26_params),
    CodeClass("C27", "(3s+6, 2s+1, 2), d=6", "s in {2,3}",
              ("3s+6_1", "3s+6_2"), build_c27,
              _fixed([{"s": 2}, {"s": 3}])),
]

_BY_ID = {cc.id: cc for cc in _CATALOG}


def catalog() -> list[CodeClass]:
    """All 27 families in frozen order."""
    return list(_CATALOG)


def get_class(class_id: str) -> CodeClass:
    if class_id not in _BY_ID:
        raise KeyError(f"unknown class id {class_id!r}")
    return _BY_ID[class_id]


def build(req: BuildRequest) -> BuiltInstance:
    return get_class(req.class_id).builder(**req.params)


def enumerate_instances(caps: EnumerationCaps = EnumerationCaps()) -> Iterator[BuildRequest]:
    """Deterministic stream of build requests covering every class."""
    for cc in _CATALOG:
        for params in cc.instances(caps):
            yield BuildRequest(cc.id, params)
