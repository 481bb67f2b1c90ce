"""Encoding, local repair, erasure decoding and the seeded simulations."""

import pytest

from lrc4 import constructions as cons
from lrc4.code import min_distance
from lrc4.matrix import Gf4Matrix
from lrc4.repair import (
    DecodeResult,
    decode_erasures,
    encode,
    repair_local,
    simulate_erasure_decoding,
    simulate_local_repair,
)


def _inst(class_id, **params):
    return cons.build(cons.BuildRequest(class_id, params))


INST = _inst("C02", s=2)          # [9, 5, 3] with r = 2
CODE = INST.code


def test_encode_produces_codewords():
    word = encode(CODE, [1, 2, 3, 0, 1])
    assert len(word) == 9
    col = CODE.parity_check.matmul(Gf4Matrix([[x] for x in word]))
    assert col.is_zero()
    with pytest.raises(ValueError):
        encode(CODE, [1, 2])


def test_repair_local_every_coordinate():
    word = encode(CODE, [3, 1, 0, 2, 2])
    for pos in range(CODE.n):
        value, reads = repair_local(CODE, INST.profile, word, pos)
        assert value == word[pos]
        assert reads <= INST.profile.r_claimed


def test_repair_local_requires_coverage():
    profile_partial = INST.profile
    uncovering = profile_partial.__class__.build(INST.h, [0], 2)
    word = encode(CODE, [0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        repair_local(CODE, uncovering, word, 5)


def test_decode_erasures_roundtrip():
    word = encode(CODE, [1, 0, 2, 3, 1])
    d = min_distance(CODE)
    received = list(word)
    received[0] = None
    received[4] = None
    out = decode_erasures(CODE, received[: CODE.n])
    assert out.ok and list(out.word) == word
    assert d - 1 == 2


def test_decode_failure_is_a_value():
    # erase the support of a minimum-weight codeword: ambiguous by definition
    from lrc4.code import weight_distribution_bruteforce  # noqa: F401
    word = encode(CODE, [0] * CODE.k)
    # coordinates {0,1,2} support codewords of the repetition group
    received = [None, None, None] + word[3:]
    out = decode_erasures(CODE, received)
    assert isinstance(out, DecodeResult)
    assert not out.ok and out.word is None


def test_decode_no_erasures():
    word = encode(CODE, [1, 1, 1, 1, 1])
    assert decode_erasures(CODE, word).word == tuple(word)


def test_simulations_deterministic_and_correct():
    rep1 = simulate_local_repair(CODE, INST.profile, trials=25, seed=3)
    rep2 = simulate_local_repair(CODE, INST.profile, trials=25, seed=3)
    assert rep1 == rep2
    assert rep1.all_ok
    assert max(rep1.max_accesses) <= INST.profile.r_claimed
    csv = rep1.to_csv().splitlines()
    assert csv[0] == "coordinate,successes,accesses"
    assert len(csv) == CODE.n + 1

    er = simulate_erasure_decoding(CODE, erasures=2, trials=40, seed=3)
    assert er.all_ok
    with pytest.raises(ValueError):
        simulate_erasure_decoding(CODE, erasures=9, trials=1)
