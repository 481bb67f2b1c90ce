"""Dense matrices over GF(4) with exact linear algebra.

Matrices are immutable, dense, row-major uint8 arrays.  All derived bases are
deterministic: RREF pivots are chosen leftmost column first, topmost available
row within a column, and pivots are scaled to 1.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .gf4 import FROM_SYMBOL, INV, MUL_TABLE, TO_SYMBOL


class Gf4Matrix:
    """An immutable rows x cols matrix with entries in {0,1,2,3}."""

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(data, dtype=np.uint8)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        if arr.size and arr.max() > 3:
            raise ValueError("matrix entries must be GF(4) elements 0..3")
        arr.setflags(write=False)
        self._data = arr

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf4Matrix":
        return cls(np.zeros((rows, cols), dtype=np.uint8))

    @classmethod
    def identity(cls, n: int) -> "Gf4Matrix":
        return cls(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Gf4Matrix":
        return cls(rows)

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the entries."""
        return self._data

    def row(self, i: int) -> tuple:
        return tuple(int(x) for x in self._data[i])

    def col(self, j: int) -> tuple:
        return tuple(int(x) for x in self._data[:, j])

    def row_list(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij) -> int:
        i, j = ij
        return int(self._data[i, j])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf4Matrix):
            return NotImplemented
        return self._data.shape == other._data.shape and bool(
            np.array_equal(self._data, other._data)
        )

    def __hash__(self):
        return hash((self._data.shape, self._data.tobytes()))

    def __repr__(self):
        body = "\n".join(" ".join(TO_SYMBOL[x] for x in r) for r in self._data)
        return f"Gf4Matrix({self.rows}x{self.cols})\n{body}"

    def transpose(self) -> "Gf4Matrix":
        return Gf4Matrix(self._data.T)

    def matmul(self, other: "Gf4Matrix") -> "Gf4Matrix":
        """Exact product over GF(4)."""
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.cols} vs {other.rows}")
        out = np.zeros((self.rows, other.cols), dtype=np.uint8)
        for t in range(self.cols):
            # out ^= outer(self[:,t], other[t,:]) computed by table lookup
            out ^= MUL_TABLE[self._data[:, t][:, None], other._data[t][None, :]]
        return Gf4Matrix(out)

    def scale_row(self, i: int, c: int) -> "Gf4Matrix":
        arr = self._data.copy()
        arr[i] = MUL_TABLE[c, arr[i]]
        return Gf4Matrix(arr)

    def is_zero(self) -> bool:
        return not self._data.any()


def mat_from_text_rows(text: str) -> Gf4Matrix:
    """Parse rows written as whitespace-separated symbols 0/1/w/W, one row
    per line.  Convenience for literal matrices in source code."""
    rows = []
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([FROM_SYMBOL[tok] for tok in line.split()])
    return Gf4Matrix(rows)


def vec_mul_add(acc: np.ndarray, coeff: int, row: np.ndarray) -> None:
    """acc ^= coeff * row, in place."""
    acc ^= MUL_TABLE[coeff, row]


def rref(m: Gf4Matrix) -> tuple[Gf4Matrix, list[int]]:
    """Reduced row-echelon form and ordered pivot columns.

    Pivoting rule: scan columns left to right; within a column take the
    topmost row (at or below the current pivot row) with a nonzero entry,
    scale it to 1, and eliminate every other nonzero entry in the column.
    """
    a = m.array.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = -1
        for i in range(r, rows):
            if a[i, c]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        if a[r, c] != 1:
            a[r] = MUL_TABLE[INV[a[r, c]], a[r]]
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] ^= MUL_TABLE[a[i, c], a[r]]
        pivots.append(c)
        r += 1
    return Gf4Matrix(a), pivots


def rank(m: Gf4Matrix) -> int:
    return len(rref(m)[1])


def null_space(m: Gf4Matrix) -> Gf4Matrix:
    """Rows form a basis of {x : m x^T = 0}; row count = cols - rank(m).

    The basis is the standard one read off the RREF (one vector per free
    column), hence deterministic.
    """
    r, pivots = rref(m)
    cols = m.cols
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for pi, pc in enumerate(pivots):
            # x_pc = rref[pi, fc] (negation is identity in characteristic 2)
            basis[bi, pc] = r.array[pi, fc]
    return Gf4Matrix(basis)


def kron(a: Gf4Matrix, b: Gf4Matrix) -> Gf4Matrix:
    """Kronecker product; block (i,j) of the result is a[i,j] * b."""
    out = np.zeros((a.rows * b.rows, a.cols * b.cols), dtype=np.uint8)
    for i in range(a.rows):
        for j in range(a.cols):
            out[i * b.rows:(i + 1) * b.rows, j * b.cols:(j + 1) * b.cols] = MUL_TABLE[
                a.array[i, j], b.array
            ]
    return Gf4Matrix(out)


def submatrix_cols(m: Gf4Matrix, cols: Iterable[int]) -> Gf4Matrix:
    """Column extraction; the given column order is preserved."""
    idx = list(cols)
    for j in idx:
        if not 0 <= j < m.cols:
            raise IndexError(f"column index {j} out of range for {m.cols} columns")
    return Gf4Matrix(m.array[:, idx])


def delete_cols(m: Gf4Matrix, cols: Iterable[int]) -> Gf4Matrix:
    drop = set(cols)
    keep = [j for j in range(m.cols) if j not in drop]
    return submatrix_cols(m, keep)


def delete_rows(m: Gf4Matrix, rows: Iterable[int]) -> Gf4Matrix:
    drop = set(rows)
    keep = [i for i in range(m.rows) if i not in drop]
    return Gf4Matrix(m.array[keep, :])


def vstack(ms: Sequence[Gf4Matrix]) -> Gf4Matrix:
    if not ms:
        raise ValueError("vstack of nothing")
    cols = ms[0].cols
    for m in ms:
        if m.cols != cols:
            raise ValueError("vstack column count mismatch")
    return Gf4Matrix(np.vstack([m.array for m in ms]))


def hstack(ms: Sequence[Gf4Matrix]) -> Gf4Matrix:
    if not ms:
        raise ValueError("hstack of nothing")
    rows = ms[0].rows
    for m in ms:
        if m.rows != rows:
            raise ValueError("hstack row count mismatch")
    return Gf4Matrix(np.hstack([m.array for m in ms]))


# ---------------------------------------------------------------------------
# Matrix text format
#
# First non-comment line:  rows=<m> cols=<n> field=GF4
# Then m lines of n space-separated symbols from {0,1,w,W}.
# Lines starting with '#' are comments and may carry metadata as
# '# key=value'; they are preserved by the parser in a side dict.
# ---------------------------------------------------------------------------

class MatrixFormatError(ValueError):
    pass


def write_matrix_text(m: Gf4Matrix, comments: dict[str, str] | None = None) -> str:
    lines = [f"rows={m.rows} cols={m.cols} field=GF4"]
    for key, value in (comments or {}).items():
        lines.append(f"# {key}={value}")
    for i in range(m.rows):
        lines.append(" ".join(TO_SYMBOL[x] for x in m.array[i]))
    return "\n".join(lines) + "\n"


def read_matrix_text(text: str) -> tuple[Gf4Matrix, dict[str, str]]:
    header = None
    comments: dict[str, str] = {}
    body: list[list[int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            stripped = line.lstrip("#").strip()
            if "=" in stripped:
                key, _, value = stripped.partition("=")
                comments[key.strip()] = value.strip()
            continue
        if header is None:
            header = line
            continue
        try:
            body.append([FROM_SYMBOL[tok] for tok in line.split()])
        except KeyError as exc:
            raise MatrixFormatError(f"bad symbol {exc} in line: {line}") from None
    if header is None:
        raise MatrixFormatError("missing header line")
    fields = dict(part.partition("=")[::2] for part in header.split())
    try:
        rows_n = int(fields["rows"])
        cols_n = int(fields["cols"])
        field = fields["field"]
    except (KeyError, ValueError):
        raise MatrixFormatError(f"bad header: {header}") from None
    if field != "GF4":
        raise MatrixFormatError(f"unsupported field {field!r}")
    if len(body) != rows_n or any(len(r) != cols_n for r in body):
        raise MatrixFormatError("matrix body does not match declared dimensions")
    return Gf4Matrix(body), comments
