import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from univfn.seqcodec import rho, seq_decode, seq_encode

from oracles import ref_seq_decode, ref_seq_encode


def bitlen_star(m):
    return max(1, m.bit_length())


def test_examples():
    assert seq_encode([]) == 0
    # 1.00.01 and 1.11.01, assembled by hand and by the reference encoder
    assert ref_seq_encode([0]) == 0b10001 == 17
    assert ref_seq_encode([1]) == 0b11101 == 29
    assert seq_encode([0]) == 17
    assert seq_encode([1]) == 29
    assert ref_seq_decode(17) == [0]
    assert seq_decode(0) == []
    assert seq_decode(17) == [0]
    assert seq_decode(29) == [1]


def test_malformed_codes_decode_empty():
    assert ref_seq_decode(5) == []
    assert seq_decode(5) == []


def test_decoder_agrees_with_reference_on_every_small_code():
    for code in range(1 << 14):
        assert seq_decode(code) == ref_seq_decode(code), code


@given(st.lists(st.integers(0, 2**10 - 1), max_size=8))
def test_roundtrip_and_reference(s):
    code = seq_encode(s)
    assert code == ref_seq_encode(s)
    assert seq_decode(code) == s


@given(st.lists(st.integers(0, 2**300), max_size=5))
def test_roundtrip_big_elements(s):
    assert seq_decode(seq_encode(s)) == s


@given(st.lists(st.integers(0, 2**10 - 1), min_size=1, max_size=8))
def test_exact_bit_length(s):
    assert seq_encode(s).bit_length() == 1 + sum(2 * bitlen_star(m) + 2 for m in s)


@given(st.lists(st.integers(0, 2**10 - 1), max_size=8), st.integers(0, 20))
def test_rho_extends_with_zeros(s, i):
    alpha = seq_encode(s)
    assert rho(alpha, i) == (s[i] if i < len(s) else 0)


def test_rho_examples():
    assert all(rho(0, i) == 0 for i in range(50))
    assert rho(seq_encode([1]), 0) == 1
    assert rho(seq_encode([4, 9, 2]), 1) == 9


def test_rho_total_on_garbage():
    rng = random.Random(3)
    for _ in range(500):
        alpha = rng.getrandbits(rng.randrange(1, 200))
        assert rho(alpha, rng.randrange(10)) >= 0


def test_negative_rejected():
    with pytest.raises(ValueError):
        seq_encode([-1])
    with pytest.raises(ValueError):
        seq_decode(-3)
