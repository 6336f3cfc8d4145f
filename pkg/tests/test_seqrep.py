import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from seqbool.binomials import binomial_sequence
from seqbool.boolrep import anf_to_tt, minterm_support
from seqbool.gf2core import BitSequence, DomainError, ParseError, moebius_batch, parse_bits
from seqbool.gssgen import linear_complexity
from seqbool.seqrep import (
    BinomialCombo,
    RanfPolynomial,
    anf_of_sequence,
    brep_from_ranf,
    brep_from_sequence,
    extend_frame,
    format_brep,
    format_ranf,
    parse_brep,
    parse_ranf,
    profile,
    ranf_from_brep,
    ranf_truth_tables,
    sequence_from_brep,
    sequence_from_ranf,
)
from seqbool.verify import all_vectors

RANF_ROWS = [
    "1", "x1", "x2", "x2*x1", "x3", "x3*x1", "x3*x2", "x3*x2*x1",
    "x4", "x4*x1", "x4*x2", "x4*x2*x1", "x4*x3", "x4*x3*x1", "x4*x3*x2", "x4*x3*x2*x1",
]


def xor_of_binomials(support, frame):
    """Sequence as an explicit XOR of binomial sequences."""
    out = np.zeros(frame, dtype=np.uint8)
    for i in support:
        out ^= binomial_sequence(i, frame).bits
    return BitSequence(out)


@st.composite
def combos(draw, max_t=6):
    t = draw(st.integers(0, max_t))
    frame = 1 << t
    support = draw(st.sets(st.integers(0, frame - 1)))
    return BinomialCombo(frame, tuple(sorted(support)))


@pytest.mark.parametrize("seq, support", [
    ("0001110010011011", (3, 4, 6, 7, 8, 9, 10, 11, 12)),
    ("11100001", (0, 3, 4)),
    ("00000000", ()),
])
def test_brep_from_sequence(seq, support):
    b = brep_from_sequence(parse_bits(seq))
    assert b.support == support
    assert b.frame == len(seq)


@pytest.mark.parametrize("support, frame, seq", [
    ((0, 3, 4), 8, "11100001"),
    ((), 8, "00000000"),
    ((1,), 16, "0101010101010101"),
])
def test_sequence_from_brep(support, frame, seq):
    assert str(sequence_from_brep(BinomialCombo(frame, support))) == seq


def test_brep_needs_power_of_two():
    with pytest.raises(DomainError, match="power of two"):
        brep_from_sequence(parse_bits("101"))


def test_combo_validation():
    with pytest.raises(DomainError):
        BinomialCombo(8, (3, 1))
    with pytest.raises(DomainError):
        BinomialCombo(8, (8,))
    with pytest.raises(DomainError):
        BinomialCombo(6, ())
    assert BinomialCombo.from_indices([1, 5, 1, 2], 8).support == (2, 5)


def test_ranf_examples():
    assert format_ranf(ranf_from_brep(BinomialCombo(8, (0, 1, 3, 4, 5)))) == (
        "1 + x1 + x2*x1 + x3 + x3*x1"
    )
    assert format_ranf(ranf_from_brep(BinomialCombo(8, (5,)))) == "x3*x1"


@pytest.mark.parametrize("i", range(16))
def test_ranf_rows(i):
    assert str(ranf_from_brep(BinomialCombo(16, (i,)))) == RANF_ROWS[i]
    assert parse_ranf(RANF_ROWS[i]).indices == (i,)


@pytest.mark.parametrize("j", range(1, 9))
def test_single_variable_and_staircase_rules(j):
    assert format_ranf(RanfPolynomial([1 << (j - 1)])) == f"x{j}"
    staircase = "*".join(f"x{k}" for k in range(j, 0, -1))
    assert parse_ranf(staircase).indices == ((1 << j) - 1,)


def test_brep_from_ranf_frame_too_small():
    with pytest.raises(DomainError, match="too small"):
        brep_from_ranf(parse_ranf("x3*x1"), 4)
    assert brep_from_ranf(parse_ranf("x3*x1"), 8).support == (5,)


def test_sequence_from_ranf_examples():
    assert str(sequence_from_ranf(parse_ranf("x1"), 16)) == "01" * 8
    assert str(sequence_from_ranf(parse_ranf("1"), 4)) == "1111"


@settings(max_examples=200)
@given(combos())
def test_two_routes_agree(b):
    p = ranf_from_brep(b)
    direct = sequence_from_ranf(p, b.frame)
    assert direct == sequence_from_brep(b)
    assert direct == xor_of_binomials(b.support, b.frame)
    assert brep_from_ranf(p, b.frame) == b
    assert brep_from_sequence(direct) == b


@given(combos(), st.data())
def test_linearity(a, data):
    b = BinomialCombo(a.frame, tuple(sorted(data.draw(st.sets(st.integers(0, a.frame - 1))))))
    assert ranf_from_brep(a ^ b) == ranf_from_brep(a) ^ ranf_from_brep(b)
    assert sequence_from_brep(a ^ b) == sequence_from_brep(a) ^ sequence_from_brep(b)


@given(combos(max_t=5))
def test_frame_extension(b):
    s = sequence_from_brep(b)
    twice = BitSequence(np.tile(s.bits, 2))
    assert brep_from_sequence(twice).support == b.support
    assert extend_frame(b, 4 * b.frame).support == b.support


@pytest.mark.parametrize("t", range(5))
def test_exhaustive_identities(t):
    rows = all_vectors(1 << t)
    # the r-ANF truth table of a B-rep is the sequence: dense route vs butterfly
    assert np.array_equal(ranf_truth_tables(rows), moebius_batch(rows))
    if t <= 3:
        for r in rows:
            b = BinomialCombo(1 << t, tuple(np.flatnonzero(r)))
            assert np.array_equal(sequence_from_brep(b).bits, ranf_truth_tables(r))


def test_anf_of_sequence():
    s = parse_bits("0001110010011011")
    a = anf_of_sequence(s)
    assert a.support == (3, 4, 5, 8, 11, 12, 14, 15)
    assert minterm_support(anf_to_tt(a)) == brep_from_sequence(s).support
    assert anf_of_sequence(parse_bits("0000")).support == ()
    assert minterm_support(anf_to_tt(anf_of_sequence(parse_bits("11100001")))) == (0, 3, 4)


def test_profile_examples():
    p = profile(BinomialCombo(16, (3, 4, 6, 7, 8, 9, 10, 11, 12)))
    assert (p.lc, p.period, p.max_anf_degree) == (13, 16, True)
    p = profile(BinomialCombo(8, (1,)))
    assert (p.lc, p.period, p.balanced) == (2, 2, True)
    p = profile(parse_bits("0000"))
    assert (p.lc, p.period) == (0, 1)


def test_balanced_sequences_of_period_16():
    rows = all_vectors(16)
    balanced = rows[rows.sum(axis=1) == 8]
    for r in balanced[::97]:
        p = profile(BitSequence(r))
        assert not p.last_coeff_present and p.lc < 16


@settings(max_examples=60, deadline=None)
@given(combos(max_t=8))
def test_lc_equals_top_index_plus_one(b):
    s = sequence_from_brep(b)
    twice = BitSequence(np.tile(s.bits, 2))
    assert linear_complexity(twice) == profile(b).lc


@given(combos())
def test_text_round_trip(b):
    assert parse_brep(format_brep(b), b.frame) == b
    assert parse_ranf(format_ranf(ranf_from_brep(b))) == ranf_from_brep(b)


def test_parse_brep():
    assert parse_brep("(0,3,4)") == BinomialCombo(8, (0, 3, 4))
    assert parse_brep("()").support == ()
    assert parse_brep("(5)", 16).frame == 16
    with pytest.raises(ParseError):
        parse_brep("(1,a)")
    with pytest.raises(ParseError):
        parse_brep("(1,1)")


def test_parse_ranf_cancels_and_rejects():
    assert parse_ranf("x1 + x2*x1 + x1").indices == (3,)
    assert parse_ranf("0").indices == ()
    with pytest.raises(ParseError):
        parse_ranf("x0")
    assert parse_ranf("x1*x3") == parse_ranf("x3*x1")
