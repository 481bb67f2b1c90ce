"""Locality semantics: certificates, exact locality, the distance bound,
substructure checks, profile sidecar round trip."""

import pytest

from lrc4.code import LinearCode
from lrc4.errors import CapacityError
from lrc4.lrc import (
    LrcProfile,
    check_substructure_amds,
    check_substructure_mds,
    code_locality,
    delete_locality_rows,
    distance_cap,
    exact_locality,
    is_optimal_lrc,
    locality_rows_disjoint,
    profile_chain_ok,
    profile_comments,
    profile_from_comments,
    singleton_like_bound,
    verify_locality_certificate,
)
from lrc4.matrix import Gf4Matrix, kron, mat_from_text_rows, vstack

# three disjoint repetition groups: a [12, 9, 2] code with locality 3
H_D2 = kron(Gf4Matrix.identity(3), Gf4Matrix([[1, 1, 1, 1]]))

# the [9, 5, 3] member of the smallest distance-3 family
H_33 = mat_from_text_rows("""
    1 1 1 0 0 0 0 0 0
    0 0 0 1 1 1 0 0 0
    0 0 0 0 0 0 1 1 1
    0 1 w 0 1 w 0 1 w
""")


def test_singleton_like_bound_values():
    assert singleton_like_bound(12, 9, 3) == 2
    assert singleton_like_bound(9, 5, 2) == 3
    # r = k reduces to the classical Singleton bound
    assert singleton_like_bound(10, 4, 4) == 7
    with pytest.raises(ValueError):
        singleton_like_bound(4, 4, 2)


def test_distance_cap():
    assert distance_cap(4, 9, 3) == 4       # r does not divide k-1
    assert distance_cap(4, 5, 2) == 8       # r divides k-1
    with pytest.raises(ValueError):
        distance_cap(4, 3, 3)


def test_profile_build_and_groups():
    p = LrcProfile.build(H_33, [0, 1, 2], 2)
    assert (p.l, p.u) == (3, 1)
    assert p.repair_groups[0] == (1, 2)
    assert p.repair_groups[4] == (3, 5)
    with pytest.raises(ValueError):
        LrcProfile.build(H_33, [0, 0], 2)
    with pytest.raises(IndexError):
        LrcProfile.build(H_33, [9], 2)


def test_certificate():
    c = LinearCode(H_33)
    assert verify_locality_certificate(c, LrcProfile.build(H_33, [0, 1, 2], 2))
    # claiming r = 1 breaks the weight bound
    assert not verify_locality_certificate(c, LrcProfile.build(H_33, [0, 1, 2], 1))
    # dropping a row leaves coordinates uncovered
    assert not verify_locality_certificate(c, LrcProfile.build(H_33, [0, 1], 2))


def test_exact_locality():
    c = LinearCode(H_D2)
    assert exact_locality(c) == [3] * 12
    assert code_locality(c) == 3
    assert code_locality(LinearCode(H_33)) == 2


def test_exact_locality_uncovered_coordinate():
    h = Gf4Matrix([[1, 1, 0]])
    per = exact_locality(LinearCode(h))
    assert per == [1, 1, None]
    assert code_locality(LinearCode(h)) is None


def test_exact_locality_cap():
    h = kron(Gf4Matrix.identity(15), Gf4Matrix([[1, 1]]))
    with pytest.raises(CapacityError):
        exact_locality(LinearCode(h))


def test_optimal_verdicts():
    c = LinearCode(H_33)
    p = LrcProfile.build(H_33, [0, 1, 2], 2)
    v = is_optimal_lrc(c, p)
    assert v.is_optimal and (v.d, v.bound) == (3, 3) and not v.failures

    bad = is_optimal_lrc(LinearCode(H_D2), LrcProfile.build(H_D2, [0, 1, 2], 2))
    assert not bad.is_optimal
    assert "locality-certificate" in bad.failures


def test_delete_locality_rows_and_substructure():
    c = LinearCode(H_33)
    p = LrcProfile.build(H_33, [0, 1, 2], 2)
    res, removed = delete_locality_rows(c, p, [0])
    assert removed == 3 and res.n == 6
    with pytest.raises(ValueError):
        delete_locality_rows(c, p, [3])
    # ceil(5/2) = 3: delete any 2 rows -> MDS residual, any 1 -> AMDS residual
    assert check_substructure_mds(c, p)
    assert check_substructure_amds(c, p)


def test_substructure_degenerate_t0():
    # ceil(k/r) = 1: the check degenerates to the code itself being MDS
    h = mat_from_text_rows("1 1 1 1\n0 1 w W")
    p = LrcProfile.build(h, [0], 3)
    assert check_substructure_mds(LinearCode(h), p)


def test_profile_chain_and_disjoint():
    c = LinearCode(H_33)
    p = LrcProfile.build(H_33, [0, 1, 2], 2)
    assert profile_chain_ok(c, p)
    assert locality_rows_disjoint(c, p)
    h = mat_from_text_rows("1 1 1 0\n0 0 1 1\n0 1 w W")
    p2 = LrcProfile.build(h, [0, 1], 2)
    assert not locality_rows_disjoint(LinearCode(h), p2)


def test_profile_sidecar_roundtrip():
    p = LrcProfile.build(H_33, [0, 1, 2], 2)
    comments = profile_comments(p)
    assert comments == {"locality_rows": "0,1,2", "r": "2"}
    p2 = profile_from_comments(H_33, comments)
    assert p2 == p
    assert profile_from_comments(H_33, {}) is None
