"""Code-level analysis: distance strategies, weight distributions, MDS
predicates, puncture/shorten/dual.

Frozen oracles (independent hand/brute-force enumeration):
  - the [4,2,3] MDS code has weight distribution A_0=1, A_3=12, A_4=3;
  - the [6,3,4] MDS code has A_0=1, A_4=45, A_5=0, A_6=18.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lrc4.code import (
    ENUM_CAP,
    LinearCode,
    _subset_search,
    amds_length_ok,
    dual,
    is_amds,
    is_mds,
    is_near_mds,
    mds_constraints_ok,
    mds_weight_distribution,
    min_distance,
    near_mds_length_ok,
    puncture,
    same_codeword_set,
    shorten,
    weight_distribution_bruteforce,
)
from lrc4.errors import CapacityError
from lrc4.matrix import Gf4Matrix, mat_from_text_rows

H_423 = Gf4Matrix([[1, 1, 1, 1], [0, 1, 2, 3]])

H_634 = mat_from_text_rows("""
    1 1 1 1 1 1
    0 1 0 W 1 W
    0 0 1 W W 1
""")


def brute_counts(c: LinearCode) -> list[int]:
    """Independent weight enumeration straight from the generator rows."""
    from lrc4.gf4 import MUL

    g = c.generator.row_list()
    counts = [0] * (c.n + 1)
    for coeffs in itertools.product(range(4), repeat=c.k):
        word = [0] * c.n
        for m, row in zip(coeffs, g):
            for j, x in enumerate(row):
                word[j] ^= MUL[m][x]
        counts[sum(1 for x in word if x)] += 1
    return counts


def test_dimension_from_parity_check():
    c = LinearCode(H_423)
    assert (c.n, c.k, c.redundancy) == (4, 2, 2)


def test_423_oracle():
    c = LinearCode(H_423)
    assert min_distance(c) == 3
    wd = weight_distribution_bruteforce(c)
    assert tuple(wd.counts) == (1, 0, 0, 12, 3)
    assert wd.counts == mds_weight_distribution(4, 2).counts
    assert wd.total() == 4**2


def test_634_oracle():
    c = LinearCode(H_634)
    assert (c.n, c.k) == (6, 3)
    assert min_distance(c) == 4
    wd = weight_distribution_bruteforce(c)
    assert (wd[4], wd[5], wd[6]) == (45, 0, 18)
    assert wd.counts == mds_weight_distribution(6, 3).counts
    assert list(wd.counts) == brute_counts(c)


def test_distance_strategies_agree():
    for h in (H_423, H_634, Gf4Matrix([[1, 1, 1], [0, 1, 2]])):
        c = LinearCode(h)
        assert _subset_search(h, 9) == min_distance(LinearCode(h)) == min_distance(c)


def test_min_distance_limit_verdict():
    c = LinearCode(H_634)
    assert min_distance(c, limit=3) is None
    assert min_distance(LinearCode(H_634), limit=4) == 4


def test_min_distance_rejects_zero_code():
    with pytest.raises(ValueError):
        min_distance(LinearCode(Gf4Matrix([[1, 0], [0, 1]])))


def test_weight_distribution_cap():
    big = Gf4Matrix([[1] * 30])
    with pytest.raises(CapacityError):
        weight_distribution_bruteforce(LinearCode(big), cap=ENUM_CAP)


def test_mds_predicates():
    assert is_mds(LinearCode(H_634))
    assert not is_amds(LinearCode(H_634))
    # shortening [6,3,4] at one coordinate gives a [5,2,4] MDS code
    short = shorten(LinearCode(H_634), [0])
    assert (short.n, short.k) == (5, 2)
    assert min_distance(short) == 4 and is_mds(short)


def test_near_mds():
    # the repetition-pair family member [6,2,4]: d = n - k, dual distance 2 = k
    h = mat_from_text_rows("""
        1 1 0 0 0 0
        0 0 1 1 0 0
        0 0 0 0 1 1
        0 1 0 1 0 1
    """)
    c = LinearCode(h)
    assert is_amds(c)
    assert is_near_mds(c) == (min_distance(dual(c)) == c.k)


def test_mds_constraints():
    assert mds_constraints_ok(6, 3)
    assert not mds_constraints_ok(7, 3)     # d = 5 > q
    assert not mds_constraints_ok(7, 5)     # k + 1 = 6 > q
    assert mds_constraints_ok(9, 8)         # k = n - 1 exempt
    assert amds_length_ok(9, 3) and not amds_length_ok(10, 3)
    assert near_mds_length_ok(9, 3) and not near_mds_length_ok(10, 3)
    assert amds_length_ok(100, 2)           # vacuous below k = 3


def test_puncture_and_shorten_dimensions():
    c = LinearCode(H_634)
    p = puncture(c, [0])
    # deleting a parity-check column keeps the redundancy: k = k - |cols|
    assert (p.n, p.k) == (5, 2)
    s = shorten(c, [0, 1])
    assert (s.n, s.k) == (4, 1)
    with pytest.raises(IndexError):
        puncture(c, [6])
    with pytest.raises(ValueError):
        puncture(c, range(6))


def test_dual_involution_and_equality():
    c = LinearCode(H_634)
    assert same_codeword_set(dual(dual(c)), c)
    assert not same_codeword_set(c, dual(c))
    # generator rows really are codewords
    assert H_634.matmul(c.generator.transpose()).is_zero()


@settings(max_examples=25, deadline=None)
@given(
    st.lists(
        st.lists(st.integers(0, 3), min_size=6, max_size=6),
        min_size=2,
        max_size=4,
    )
)
def test_distance_strategies_agree_property(rows):
    h = Gf4Matrix(rows)
    c = LinearCode(h)
    if c.k == 0 or c.k == c.n:
        return
    assert min_distance(c) == _subset_search(h, c.n)
