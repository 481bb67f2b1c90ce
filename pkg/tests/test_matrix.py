"""Exact linear algebra over GF(4): rref, rank, null space, block ops, I/O."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrc4.matrix import (
    Gf4Matrix,
    MatrixFormatError,
    delete_cols,
    delete_rows,
    hstack,
    kron,
    mat_from_text_rows,
    null_space,
    rank,
    read_matrix_text,
    rref,
    submatrix_cols,
    vstack,
    write_matrix_text,
)

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(0, 3), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
).map(Gf4Matrix)


def test_entries_validated():
    with pytest.raises(ValueError):
        Gf4Matrix([[0, 4]])
    with pytest.raises(ValueError):
        Gf4Matrix([1, 2, 3])


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_rref_is_idempotent_and_preserves_rank(m):
    red, pivots = rref(m)
    assert rank(red) == len(pivots) == rank(m)
    red2, pivots2 = rref(red)
    assert red2 == red and pivots2 == pivots
    # pivot columns carry unit vectors
    for i, j in enumerate(pivots):
        col = red.col(j)
        assert col[i] == 1 and all(x == 0 for t, x in enumerate(col) if t != i)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_null_space_is_orthogonal_complement(m):
    ns = null_space(m)
    assert ns.rows == m.cols - rank(m)
    if ns.rows:
        assert m.matmul(ns.transpose()).is_zero()
        assert rank(ns) == ns.rows


def test_rank_examples():
    assert rank(Gf4Matrix.identity(4)) == 4
    assert rank(Gf4Matrix.zeros(3, 5)) == 0


def test_rank_proportional_rows():
    # w * (1, w) = (w, w^2): rows proportional, rank 1
    assert rank(Gf4Matrix([[1, 2], [2, 3]])) == 1


def test_kron_block_structure():
    a = Gf4Matrix.identity(2)
    b = Gf4Matrix([[1, 2, 3]])
    k = kron(a, b)
    assert (k.rows, k.cols) == (2, 6)
    assert k.row(0) == (1, 2, 3, 0, 0, 0)
    assert k.row(1) == (0, 0, 0, 1, 2, 3)


def test_kron_scales_entries():
    a = Gf4Matrix([[2]])
    b = Gf4Matrix([[2, 3]])
    assert kron(a, b).row(0) == (3, 1)  # w*w = W, w*W = 1


def test_stack_and_delete():
    a = Gf4Matrix([[1, 2], [3, 0]])
    b = Gf4Matrix([[0, 1]])
    v = vstack([a, b])
    assert v.rows == 3 and v.row(2) == (0, 1)
    h = hstack([a, a])
    assert h.cols == 4
    assert delete_cols(v, [0]).cols == 1
    assert delete_rows(v, [1]).rows == 2
    assert submatrix_cols(v, [1]).col(0) == (2, 0, 1)


def test_matmul_example():
    a = Gf4Matrix([[1, 2]])
    b = Gf4Matrix([[3], [3]])
    # 1*W + w*W = W + 1 = w
    assert a.matmul(b)[0, 0] == 2


def test_text_roundtrip_with_comments():
    m = mat_from_text_rows("1 w W 0\n0 1 w W")
    text = write_matrix_text(m, {"r": "2", "locality_rows": "0"})
    m2, comments = read_matrix_text(text)
    assert m2 == m
    assert comments == {"r": "2", "locality_rows": "0"}
    assert text.splitlines()[0] == "rows=2 cols=4 field=GF4"


def test_text_format_errors():
    with pytest.raises(MatrixFormatError):
        read_matrix_text("rows=1 cols=2 field=GF4\n1 2 3\n")
    with pytest.raises(MatrixFormatError):
        read_matrix_text("not a header\n")


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_text_roundtrip_property(m):
    m2, _ = read_matrix_text(write_matrix_text(m))
    assert m2 == m
