"""Projective geometry over GF(4): points, caps, the necessary-condition
verifier, and the 13-column forbidden form."""

import random

import pytest

from lrc4 import constructions as cons
from lrc4.geometry import (
    CapReport,
    DependencyError,
    PgPoint,
    collinear,
    forbidden_form_distance,
    is_cap,
    keylemma_check,
    keylemma_r5_variant,
    m2,
    normalize,
    pair_point,
    pg_points,
    random_634_parity_check,
    random_forbidden_instance,
    triple_points,
)
from lrc4.matrix import Gf4Matrix, mat_from_text_rows

A_CANON = mat_from_text_rows("""
    1 1 1 1 1 1
    0 1 0 W 1 W
    0 0 1 W W 1
""")


def test_normalize_scales_leading_entry_to_one():
    # w^{-1} * (w, W, 0) = (1, w, 0)
    assert normalize((2, 3, 0)).coords == (1, 2, 0)
    assert normalize((0, 3, 3)).coords == (0, 1, 1)
    with pytest.raises(ValueError):
        normalize((0, 0, 0))


def test_pg_point_counts():
    assert len(pg_points(1)) == 5
    assert len(pg_points(2)) == 21
    assert len(pg_points(3)) == 85
    # all normalized and distinct
    pts = pg_points(2)
    assert len(set(pts)) == 21
    assert all(p.coords[next(i for i, x in enumerate(p.coords) if x)] == 1 for p in pts)


def test_collinear():
    a, b = normalize((1, 0, 0)), normalize((0, 1, 0))
    assert collinear(a, b, normalize((1, 1, 0)))
    assert not collinear(a, b, normalize((0, 0, 1)))


def test_is_cap_reports_witness():
    pts = [normalize(v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))]
    rep = is_cap(pts)
    assert rep.is_cap and rep.witness is None
    bad = is_cap(pts + [normalize((1, 1, 0))])
    assert not bad.is_cap and bad.witness is not None
    assert "FAIL" in bad.render() and "PASS" in rep.render()


def test_m2_table():
    assert m2(2) == 6 and m2(3) == 17
    with pytest.raises(ValueError):
        m2(4)


def _inst(class_id, **params):
    return cons.build(cons.BuildRequest(class_id, params))


def test_pair_point_cancels_locality_row():
    inst = _inst("C24", k=2)
    h, p = inst.h, inst.profile
    pt = pair_point(h, p, 0, 1)
    assert isinstance(pt, PgPoint)
    # first repair group {0,1}: restriction of col0+col1 to the two h2 rows
    assert pt.coords == normalize((1, 2)).coords
    with pytest.raises(ValueError):
        pair_point(h, p, 0, 0)


def test_triple_points_distinct_classes():
    inst = _inst("C27", s=2)
    a, b = triple_points(inst.h, inst.profile, 0, 1, 2)
    assert a != b


def test_keylemma_case1_on_pair_family():
    for k in (2, 3):
        inst = _inst("C24", k=k)
        rep = keylemma_check(inst.h, inst.profile, 1)
        assert rep.passed and rep.l == k + 2
        assert rep.lhs == rep.l and rep.rhs == 5


def test_keylemma_case3_on_distance8_family():
    for k in (2, 3):
        inst = _inst("C25", k=k)
        rep = keylemma_check(inst.h, inst.profile, 3)
        assert rep.passed
        assert rep.l == k + 3 and rep.l * rep.r <= m2(rep.u - 1) == 6
        assert rep.cap is not None and rep.cap.is_cap


def test_keylemma_case2_on_triple_family():
    for s in (2, 3):
        inst = _inst("C27", s=s)
        rep = keylemma_check(inst.h, inst.profile, 2)
        assert rep.passed
        assert rep.lhs == 3 * (s + 2) + 2 and rep.rhs == 21


def test_keylemma_shape_rejections():
    inst = _inst("C23", r=2)  # overlapping locality rows: not the shape
    with pytest.raises(ValueError):
        keylemma_check(inst.h, inst.profile, 1)
    good = _inst("C24", k=2)
    with pytest.raises(ValueError):
        keylemma_check(good.h, good.profile, 4)


def test_keylemma_case2_needs_small_r():
    inst = _inst("C18", s=2)  # r = 5
    with pytest.raises(ValueError):
        keylemma_check(inst.h, inst.profile, 2)


def test_r5_variant_arithmetic():
    assert keylemma_r5_variant(2) == (75, 85, True)
    lhs, rhs, ok = keylemma_r5_variant(3)
    assert (lhs, rhs, ok) == (90, 85, False)


def test_forbidden_form_canonical():
    assert forbidden_form_distance(A_CANON, A_CANON, (1, 1, 0, 0)) <= 3


def test_forbidden_form_validation():
    with pytest.raises(ValueError):
        forbidden_form_distance(A_CANON, A_CANON, (0, 1, 0, 0))
    with pytest.raises(ValueError):
        forbidden_form_distance(A_CANON, A_CANON, (1, 0, 0, 0))
    with pytest.raises(ValueError):
        forbidden_form_distance(A_CANON, A_CANON, (1, 1, 0))
    bad = Gf4Matrix([[1, 1, 1, 1, 1, 1], [0, 1, 0, 3, 1, 3]])
    with pytest.raises(ValueError):
        forbidden_form_distance(bad, A_CANON, (1, 1, 0, 0))


def test_random_634_is_valid():
    rng = random.Random(11)
    m = random_634_parity_check(rng)
    assert (m.rows, m.cols) == (3, 6)
    assert all(m[0, j] == 1 for j in range(6))


def test_random_forbidden_instances_have_small_distance():
    rng = random.Random(5)
    for _ in range(5):
        a, b, x = random_forbidden_instance(rng)
        assert forbidden_form_distance(a, b, x) <= 3
