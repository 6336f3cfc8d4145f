import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from seqbool.gf2core import (
    BitSequence,
    DomainError,
    ParseError,
    binomial_matrix,
    moebius,
    moebius_batch,
    pack_words,
    parse_bits,
    rotate_left,
    seq_stats,
    unpack_words,
)


def subset_matrix(t):
    """Reference H_t straight from the subset rule."""
    n = 1 << t
    return np.array([[1 if i & j == i else 0 for j in range(n)] for i in range(n)], dtype=np.uint8)


def bits_of(n):
    return st.lists(st.integers(0, 1), min_size=n, max_size=n)


H4_ROWS = [
    "1111111111111111",
    "0101010101010101",
    "0011001100110011",
    "0001000100010001",
    "0000111100001111",
    "0000010100000101",
    "0000001100000011",
    "0000000100000001",
    "0000000011111111",
    "0000000001010101",
    "0000000000110011",
    "0000000000010001",
    "0000000000001111",
    "0000000000000101",
    "0000000000000011",
    "0000000000000001",
]


@pytest.mark.parametrize("text, expected", [
    ("1 1 1 0 0 0 0 1", "11100001"),
    ("0", "0"),
    ("0,1,0,1", "0101"),
])
def test_parse_bits(text, expected):
    s = parse_bits(text)
    assert str(s) == expected
    assert s.length == len(expected)


def test_parse_bits_errors():
    with pytest.raises(ParseError, match="index 2"):
        parse_bits("01201")
    with pytest.raises(ParseError):
        parse_bits("  ")


def test_bitsequence_is_immutable_value():
    s = parse_bits("0110")
    with pytest.raises(ValueError):
        s.bits[0] = 1
    assert s == BitSequence([0, 1, 1, 0])
    assert hash(s) == hash(BitSequence([0, 1, 1, 0]))
    assert s != parse_bits("01100")
    assert BitSequence.from_int(s.to_int(), 4) == s
    with pytest.raises(DomainError):
        BitSequence([0, 2])


def test_moebius_worked_vector():
    m = parse_bits("1100000100001000")
    assert str(moebius(m)) == "1010101110100100"


def test_moebius_unit_vector_gives_all_ones():
    e0 = BitSequence([1] + [0] * 15)
    assert str(moebius(e0)) == "1" * 16


def test_moebius_rejects_bad_length():
    with pytest.raises(DomainError):
        moebius(parse_bits("101"))


@settings(max_examples=200)
@given(bits_of(32))
def test_moebius_matches_matrix_product(v):
    v = BitSequence(v)
    ref = (v.bits.astype(np.int64) @ subset_matrix(5)) & 1
    out = moebius(v)
    assert np.array_equal(out.bits, ref)
    assert moebius(out) == v


@pytest.mark.parametrize("t", [7, 8, 10])
def test_moebius_multiword_matches_matrix(t):
    rng = np.random.default_rng(t)
    rows = rng.integers(0, 2, (4, 1 << t), dtype=np.uint8)
    ref = (rows.astype(np.int64) @ subset_matrix(t)) & 1
    assert np.array_equal(moebius_batch(rows), ref)


def test_binomial_matrix_small():
    assert binomial_matrix(0).tolist() == [[1]]
    assert binomial_matrix(1).tolist() == [[1, 1], [0, 1]]


def test_binomial_matrix_h4_display():
    h = binomial_matrix(4)
    assert ["".join(map(str, r)) for r in h] == H4_ROWS
    assert np.array_equal(h, subset_matrix(4))
    assert np.array_equal((h.astype(int) @ h) % 2, np.eye(16, dtype=int))


def test_binomial_matrix_cap():
    with pytest.raises(DomainError):
        binomial_matrix(13)


@pytest.mark.parametrize("n", [1, 8, 63, 64, 65, 200])
def test_pack_roundtrip(n):
    rng = np.random.default_rng(n)
    bits = rng.integers(0, 2, n, dtype=np.uint8)
    words = pack_words(bits)
    assert np.array_equal(unpack_words(words, n), bits)
    # position 0 is the least significant bit of word 0
    assert int(words[0]) & 1 == bits[0]


def test_rotate_left():
    assert str(rotate_left(parse_bits("00000101"), 4)) == "01010000"
    assert str(rotate_left(parse_bits("00000001"), 7)) == "10000000"
    s = parse_bits("0010111")
    assert rotate_left(s, 0) == s
    assert rotate_left(s, 7) == s
    with pytest.raises(DomainError):
        rotate_left(s, -1)


@given(bits_of(16), st.integers(0, 40), st.integers(0, 40))
def test_rotate_composes(v, a, b):
    s = BitSequence(v)
    assert rotate_left(rotate_left(s, a), b) == rotate_left(s, a + b)


@pytest.mark.parametrize("text, stats", [
    ("10110001", (4, 8, True)),
    ("11111111", (8, 1, False)),
    ("0101", (2, 2, True)),
    ("011011", (4, 3, False)),
])
def test_seq_stats(text, stats):
    assert tuple(seq_stats(parse_bits(text))) == stats
