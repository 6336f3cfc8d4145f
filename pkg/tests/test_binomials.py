import numpy as np
import pytest
from hypothesis import given, strategies as st

from seqbool.binomials import (
    binomial_meta,
    binomial_sequence,
    binomial_window,
    sierpinski_row,
    submasks,
)
from seqbool.gf2core import DomainError
from seqbool.gssgen import linear_complexity

# first 16 terms, period and linear complexity of C(n, i) mod 2, i = 0..15
BINOMIAL_ROWS = [
    ("1111111111111111", 1, 1),
    ("0101010101010101", 2, 2),
    ("0011001100110011", 4, 3),
    ("0001000100010001", 4, 4),
    ("0000111100001111", 8, 5),
    ("0000010100000101", 8, 6),
    ("0000001100000011", 8, 7),
    ("0000000100000001", 8, 8),
    ("0000000011111111", 16, 9),
    ("0000000001010101", 16, 10),
    ("0000000000110011", 16, 11),
    ("0000000000010001", 16, 12),
    ("0000000000001111", 16, 13),
    ("0000000000000101", 16, 14),
    ("0000000000000011", 16, 15),
    ("0000000000000001", 16, 16),
]


def pascal_rows(n):
    """Rows of Pascal's triangle mod 2 by the additive recurrence."""
    row = [1]
    out = [row]
    for _ in range(n - 1):
        row = [1] + [(a + b) % 2 for a, b in zip(row, row[1:])] + [1]
        out.append(row)
    return out


@pytest.mark.parametrize("i", range(16))
def test_binomial_rows(i):
    bits, period, lc = BINOMIAL_ROWS[i]
    assert str(binomial_sequence(i, 16)) == bits
    assert tuple(binomial_meta(i)) == (period, lc)


@pytest.mark.parametrize("i, T, expected", [
    (5, 16, "0000010100000101"),
    (0, 8, "11111111"),
    (7, 8, "00000001"),
])
def test_binomial_sequence_examples(i, T, expected):
    assert str(binomial_sequence(i, T)) == expected


def test_binomial_meta_examples():
    assert tuple(binomial_meta(8)) == (16, 9)


@pytest.mark.parametrize("i", [0, 1, 5, 13, 37, 100])
def test_lc_matches_berlekamp_massey(i):
    period = binomial_meta(i).period
    s = binomial_sequence(i, 2 * period)
    assert linear_complexity(s) == i + 1


def test_binomial_sequence_against_lucas():
    from math import comb
    for i in range(20):
        s = binomial_sequence(i, 32)
        assert list(s) == [comb(n, i) % 2 for n in range(32)]


def test_window_truncation_flag():
    w = binomial_window(5, 4)
    assert str(w.bits) == "0000"
    assert w.truncated and w.period == 8 and w.lc == 6
    assert not binomial_window(5, 16).truncated


def test_binomial_sequence_domain():
    with pytest.raises(DomainError):
        binomial_sequence(-1, 8)
    with pytest.raises(DomainError):
        binomial_sequence(3, 12)


@pytest.mark.parametrize("r, expected", [
    (0, "1"),
    (5, "110011"),
    (6, "1010101"),
])
def test_sierpinski_examples(r, expected):
    assert str(sierpinski_row(r)) == expected


def test_sierpinski_matches_pascal():
    for r, row in enumerate(pascal_rows(64)):
        assert list(sierpinski_row(r).bits) == row


@given(st.integers(0, 5000))
def test_submasks(r):
    got = submasks(r).tolist()
    assert got == sorted(got)
    assert all(i & r == i for i in got)
    assert len(got) == 2 ** bin(r).count("1")


@given(st.integers(0, 511))
def test_submasks_are_sierpinski_ones(r):
    assert np.flatnonzero(sierpinski_row(r).bits).tolist() == submasks(r).tolist()
