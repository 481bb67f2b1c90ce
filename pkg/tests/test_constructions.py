"""The 27-family catalog: fidelity of fixed displays, parameter formulas,
range errors, enumeration determinism, metadata round trip."""

import pytest

from lrc4 import constructions as cons
from lrc4.errors import RangeError
from lrc4.lrc import profile_from_comments, verify_locality_certificate
from lrc4.matrix import mat_from_text_rows, rank, read_matrix_text


def _build(class_id, **params):
    return cons.build(cons.BuildRequest(class_id, params))


def test_catalog_shape():
    classes = cons.catalog()
    assert [cc.id for cc in classes] == [f"C{i:02d}" for i in range(1, 28)]
    assert cons.get_class("C13").formula.startswith("(7s+4")
    with pytest.raises(KeyError):
        cons.get_class("C99")


def test_fidelity_smallest_distance3_family():
    # independently re-transcribed [9,5,3] member
    inst = _build("C02", s=2)
    expected = mat_from_text_rows("""
        1 1 1 0 0 0 0 0 0
        0 0 0 1 1 1 0 0 0
        0 0 0 0 0 0 1 1 1
        0 1 w 0 1 w 0 1 w
    """)
    assert inst.h == expected


def test_fidelity_length15_display():
    inst = _build("C05", s=2)
    expected = mat_from_text_rows("""
        1 1 1 1 1 1 0 0 0 0 0 0 0 0 0
        0 0 0 0 0 1 1 1 1 1 1 0 0 0 0
        0 0 0 0 1 0 0 0 0 0 1 1 1 1 1
        0 1 w W 0 1 0 1 w W 1 0 1 w W
    """)
    assert inst.h == expected


def test_fidelity_distance6_pair_display():
    inst = _build("C24", k=2)
    expected = mat_from_text_rows("""
        1 1 0 0 0 0 0 0
        0 0 1 1 0 0 0 0
        0 0 0 0 1 1 0 0
        0 0 0 0 0 0 1 1
        0 1 0 1 0 1 0 0
        0 w 0 1 0 0 0 1
    """)
    assert inst.h == expected


def test_corrected_row_weights_in_2r6_family():
    # every designated row obeys the weight <= r+1 certificate, including r=4
    for r in range(2, 8):
        inst = _build("C23", r=r)
        assert verify_locality_certificate(inst.code, inst.profile)


def test_claim_formulas_all_default_instances():
    for req in cons.enumerate_instances(cons.EnumerationCaps(max_s=3)):
        inst = cons.build(req)
        n, k, r, d = inst.claimed
        code = inst.code
        assert (code.n, code.k) == (n, k), req
        assert rank(inst.h) == n - k, req
        assert inst.profile.r_claimed == r
        assert verify_locality_certificate(code, inst.profile), req


def test_range_errors():
    cases = [
        ("C01", {"k": 2, "r": 2}),
        ("C01", {"k": 4, "r": 2, "variant": "low"}),   # r | k: no low form
        ("C02", {"s": 1}),
        ("C04", {"s": 4}),
        ("C12", {"s": 3, "variant": 2}),
        ("C12", {"s": 2, "variant": 3}),
        ("C23", {"r": 8}),
        ("C26", {"k": 6, "n": 13}),
        ("C27", {"s": 4}),
    ]
    for class_id, params in cases:
        with pytest.raises(RangeError):
            _build(class_id, **params)


def test_c01_variants():
    plain = _build("C01", k=5, r=3)
    low = _build("C01", k=5, r=3, variant="low")
    assert plain.claimed == low.claimed == (7, 5, 3, 2)
    assert plain.h != low.h
    assert low.h[1, 3] == 1 and plain.h[1, 3] == 0
    exact = _build("C01", k=6, r=3)
    assert exact.claimed == (8, 6, 3, 2)


def test_puncture_sampling_modes():
    def rs(caps):
        return [
            req.params["r"]
            for req in cons.enumerate_instances(caps)
            if req.class_id == "C07"
        ]

    assert rs(cons.EnumerationCaps()) == [2, 8, 15]
    assert rs(cons.EnumerationCaps(exhaustive_options=True)) == list(range(2, 16))


def test_enumeration_is_deterministic():
    caps = cons.EnumerationCaps(max_s=3)
    assert list(cons.enumerate_instances(caps)) == list(cons.enumerate_instances(caps))


def test_near_mds_family_witnesses():
    inst = _build("C26", k=4, n=9)
    assert inst.claimed == (9, 4, 3, 5)
    assert "punctured" in inst.metadata and "shortened" in inst.metadata
    assert (inst.code.n, inst.code.k) == (9, 4)
    base = _build("C26", k=6, n=12)
    assert base.claimed == (12, 6, 5, 6)


def test_metadata_text_roundtrip():
    inst = _build("C12", s=2, alpha=1, beta=0, variant=2)
    text = inst.to_text()
    h, comments = read_matrix_text(text)
    assert h == inst.h
    assert comments["class"] == "C12"
    assert comments["claimed"] == "(16,11,5,4)"
    assert comments["eq"] == "6s+4_5s+1_2"
    assert comments["s"] == "2" and comments["alpha"] == "1"
    profile = profile_from_comments(h, comments)
    assert profile == inst.profile
