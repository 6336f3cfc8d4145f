"""Invariant suites behind ``seqbool verify``.

Each suite returns a list of :class:`~seqbool.gssgen.Check` rows. Random
sampling is driven by a single seeded generator so that a given seed
always yields byte-identical output.
"""

from __future__ import annotations

import itertools

import numpy as np

from .binomials import binomial_sequence
from .boolrep import anf_to_tt, format_anf, parse_anf, tt_to_anf
from .gf2core import BitSequence, binomial_matrix, moebius, moebius_batch, rotate_left
from .gssgen import (
    Check,
    gss_family,
    linear_complexity,
    pn_sequence,
    primitive_polynomials,
    verify_gss_properties,
    _g_matrix,
    _v_streams,
)
from .seqrep import (
    BinomialCombo,
    RanfPolynomial,
    brep_from_ranf,
    brep_from_sequence,
    format_brep,
    format_ranf,
    parse_brep,
    parse_ranf,
    ranf_from_brep,
    ranf_truth_tables,
    sequence_from_brep,
    sequence_from_ranf,
)
from .shiftrev import reverse_brep, reverse_sequence, shift_brep

SUITES = ("core", "repr", "shift", "gss")


def all_vectors(n: int) -> np.ndarray:
    """Every 0/1 vector of length n as rows, row v holding the bits of v."""
    v = np.arange(1 << n, dtype=np.int64)
    return ((v[:, None] >> np.arange(n)) & 1).astype(np.uint8)


def _bits(row) -> str:
    return "".join(str(int(b)) for b in row)


def _first_bad_row(mask: np.ndarray, rows: np.ndarray) -> str:
    bad = np.flatnonzero(~mask)
    return "" if bad.size == 0 else _bits(rows[bad[0]])


def _row_check(name: str, scope: str, good: np.ndarray, rows: np.ndarray) -> Check:
    return Check(name, scope, bool(good.all()), _first_bad_row(good, rows))


def _random_combo(rng, frame: int) -> BinomialCombo:
    return BinomialCombo(frame, tuple(int(i) for i in np.flatnonzero(rng.integers(0, 2, frame))))


# -- core --------------------------------------------------------------------------

def core_suite(rng) -> list:
    out = []
    for t in range(5):
        rows = all_vectors(1 << t)
        good = (moebius_batch(moebius_batch(rows)) == rows).all(axis=1)
        out.append(_row_check("moebius_involution", f"t={t} exhaustive", good, rows))
    rows = rng.integers(0, 2, (1000, 32), dtype=np.uint8)
    good = (moebius_batch(moebius_batch(rows)) == rows).all(axis=1)
    out.append(_row_check("moebius_involution", "t=5 sampled 1000", good, rows))

    for t in range(7):
        n = 1 << t
        h = binomial_matrix(t).astype(np.int64)
        rows = rng.integers(0, 2, (1000, n), dtype=np.uint8)
        good = (moebius_batch(rows) == (rows.astype(np.int64) @ h) % 2).all(axis=1)
        out.append(_row_check("moebius_matches_matrix", f"t={t} sampled 1000", good, rows))
        h_sq = (h @ h) % 2
        out.append(Check("matrix_self_inverse", f"t={t}", bool((h_sq == np.eye(n)).all())))
        row_ok = all(np.array_equal(h[i], binomial_sequence(i, n).bits) for i in range(n))
        out.append(Check("matrix_rows_are_binomials", f"t={t}", row_ok))

    a = rng.integers(0, 2, (500, 64), dtype=np.uint8)
    b = rng.integers(0, 2, (500, 64), dtype=np.uint8)
    good = (moebius_batch(a ^ b) == (moebius_batch(a) ^ moebius_batch(b))).all(axis=1)
    out.append(_row_check("moebius_linear", "T=64 sampled 500", good, a))

    bad = ""
    for _ in range(200):
        n = 1 << int(rng.integers(0, 7))
        s = BitSequence(rng.integers(0, 2, n))
        x, y = (int(v) for v in rng.integers(0, 3 * n, 2))
        if rotate_left(s, x + y) != rotate_left(rotate_left(s, x), y):
            bad = f"{s} by {x}+{y}"
            break
    out.append(Check("rotate_composition", "sampled 200", not bad, bad))
    return out


# -- representations ------------------------------------------------------------

def repr_suite(rng, max_frame: int = 32) -> list:
    out = []
    for t in range(5):
        n = 1 << t
        rows = all_vectors(n)
        coeffs = moebius_batch(rows)
        back = moebius_batch(coeffs)
        out.append(_row_check("brep_round_trip", f"frame={n} exhaustive",
                              (back == rows).all(axis=1), rows))
        out.append(_row_check("ranf_truth_table_is_sequence", f"frame={n} exhaustive",
                              (ranf_truth_tables(coeffs) == rows).all(axis=1), rows))
        out.append(_row_check("max_degree_parity", f"frame={n} exhaustive",
                              rows[:, -1] == coeffs.sum(axis=1) % 2, rows))
        twice = moebius_batch(np.concatenate([rows, rows], axis=1))
        same = (twice[:, :n] == coeffs).all(axis=1) & (twice[:, n:] == 0).all(axis=1)
        out.append(_row_check("frame_extension", f"T={n} exhaustive", same, rows))
        balanced = rows.sum(axis=1) * 2 == n
        # at n = 2 the balanced weight 1 is odd, so the top index can appear
        if n >= 4:
            out.append(_row_check("balanced_no_top_index", f"frame={n} exhaustive",
                                  coeffs[balanced, -1] == 0, rows[balanced]))

    bad = ""
    for frame in (8, max_frame):
        for _ in range(300):
            s = BitSequence(rng.integers(0, 2, frame))
            b = brep_from_sequence(s)
            p = ranf_from_brep(b)
            if (sequence_from_brep(b) != s or brep_from_ranf(p, frame) != b
                    or sequence_from_ranf(p, frame) != s):
                bad = str(s)
                break
    out.append(Check("object_round_trips", f"frames 8,{max_frame} sampled", not bad, bad))

    bad = ""
    for _ in range(300):
        a, c = _random_combo(rng, max_frame), _random_combo(rng, max_frame)
        if ranf_from_brep(a ^ c) != ranf_from_brep(a) ^ ranf_from_brep(c):
            bad = f"{a} ^ {c}"
            break
    out.append(Check("ranf_linear", f"frame={max_frame} sampled 300", not bad, bad))

    bad = ""
    for _ in range(500):
        frame = 1 << int(rng.integers(1, 9))
        b = _random_combo(rng, frame)
        s = sequence_from_brep(b)
        expected = b.support[-1] + 1 if b.support else 0
        lc = linear_complexity(np.concatenate([s.bits, s.bits]))
        if lc != expected:
            bad = f"{b} frame {frame}: BM {lc} vs {expected}"
            break
    out.append(Check("lc_oracle", "500 random combos, frame<=256", not bad, bad))

    bad = ""
    for j in range(1, 9):
        single = BinomialCombo(1 << j, ((1 << j) - 1,))
        product = "*".join(f"x{k}" for k in range(j, 0, -1))
        if format_ranf(ranf_from_brep(single)) != product:
            bad = f"j={j}"
        if ranf_from_brep(BinomialCombo(1 << j, (1 << (j - 1),))) != RanfPolynomial({1 << (j - 1)}):
            bad = f"x_{j}"
    out.append(Check("single_variable_and_full_product", "j<=8", not bad, bad))

    for n in range(5):
        rows = all_vectors(1 << n)
        if n == 4:
            rows = rows[::97]
        ok = all(anf_to_tt(tt_to_anf(BitSequence(r))) == BitSequence(r) for r in rows)
        scope = "n=4 every 97th" if n == 4 else f"n={n} exhaustive"
        out.append(Check("tt_anf_round_trip", scope, ok))

    bad = ""
    for _ in range(200):
        frame = 1 << int(rng.integers(0, 6))
        b = _random_combo(rng, frame)
        p = ranf_from_brep(b)
        a = tt_to_anf(BitSequence(rng.integers(0, 2, frame)))
        if (parse_brep(format_brep(b), frame) != b or parse_ranf(format_ranf(p)) != p
                or parse_anf(format_anf(a), a.nvars) != a):
            bad = f"{b}"
            break
    out.append(Check("text_round_trips", "sampled 200", not bad, bad))
    return out


# -- shift / reverse ------------------------------------------------------------

def _shift_oracle(b: BinomialCombo, r: int) -> BinomialCombo:
    return brep_from_sequence(rotate_left(sequence_from_brep(b), r))


def _reverse_oracle(b: BinomialCombo) -> BinomialCombo:
    return brep_from_sequence(reverse_sequence(sequence_from_brep(b)))


def shift_suite(rng, max_frame: int = 32) -> list:
    out = []
    frames = [1 << t for t in range(max_frame.bit_length()) if 1 << t <= max_frame]
    for frame in frames:
        bad = ""
        for k, r in itertools.product(range(frame), range(frame)):
            b = BinomialCombo(frame, (k,))
            if shift_brep(b, r) != _shift_oracle(b, r):
                bad = f"{b} by {r}"
                break
        out.append(Check("shift_sound_basis", f"frame={frame} all k,r", not bad, bad))
        bad = ""
        for k in range(frame):
            b = BinomialCombo(frame, (k,))
            if reverse_brep(b) != _reverse_oracle(b):
                bad = str(b)
                break
        out.append(Check("reverse_sound_basis", f"frame={frame} all k", not bad, bad))

    frame = max_frame
    bad = bad_rev = bad_comp = bad_inv = ""
    for _ in range(200):
        b = _random_combo(rng, frame)
        r, q = (int(v) for v in rng.integers(0, frame, 2))
        if not bad and shift_brep(b, r) != _shift_oracle(b, r):
            bad = f"{b} by {r}"
        if not bad_comp and shift_brep(b, (r + q) % frame) != shift_brep(shift_brep(b, r), q):
            bad_comp = f"{b} by {r}+{q}"
        if not bad_rev and reverse_brep(b) != _reverse_oracle(b):
            bad_rev = str(b)
        if not bad_inv and reverse_brep(reverse_brep(b)) != b:
            bad_inv = str(b)
    scope = f"frame={frame} sampled 200"
    out.append(Check("shift_sound_random", scope, not bad, bad))
    out.append(Check("shift_composition", scope, not bad_comp, bad_comp))
    out.append(Check("reverse_sound_random", scope, not bad_rev, bad_rev))
    out.append(Check("reverse_involution", scope, not bad_inv, bad_inv))

    bad = ""
    for _ in range(20):
        b = _random_combo(rng, 1024)
        r = int(rng.integers(0, 1024))
        if shift_brep(b, r) != _shift_oracle(b, r) or reverse_brep(b) != _reverse_oracle(b):
            bad = f"frame 1024 shift {r}"
            break
    out.append(Check("shift_reverse_sound_large", "frame=1024 sampled 20", not bad, bad))

    bad = ""
    for frame in (f for f in frames if f <= 64):
        for k in range(frame):
            rev = sequence_from_brep(reverse_brep(BinomialCombo(frame, (k,))))
            if rev != rotate_left(binomial_sequence(k, frame), k):
                bad = f"k={k} frame={frame}"
                break
    out.append(Check("reverse_of_binomial_is_shift", "k<frame<=64", not bad, bad))
    return out


# -- generalized sequences ----------------------------------------------------------

def gss_states(L: int) -> list:
    return [(1,) * L, (1,) + (0,) * (L - 1), (0,) * (L - 1) + (1,)]


def gss_suite(degrees=range(3, 9)) -> list:
    out = []
    for L in degrees:
        for p in primitive_polynomials(L):
            for state in gss_states(L):
                rep = verify_gss_properties(gss_family(p, state))
                bad = rep.failures()
                scope = f"p={p} state={''.join(map(str, state))}"
                detail = "" if not bad else f"{bad[0].name} {bad[0].scope} {bad[0].detail}"
                out.append(Check("gss_report", scope, rep.passed, detail))
            u = pn_sequence(p, gss_states(L)[0])
            streams = _v_streams(u.bits, _g_matrix(L)[1:])
            shifts = {np.roll(u.bits, -d).tobytes() for d in range(u.length)}
            got = {row.tobytes() for row in streams}
            out.append(Check("v_streams_are_all_shifts", f"p={p}", got == shifts))
    return out


def run(suite: str, seed: int = 0, frames: int = 32, degrees=range(3, 7)) -> list:
    rng = np.random.default_rng(seed)
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        if name == "core":
            out += core_suite(rng)
        elif name == "repr":
            out += repr_suite(rng, frames)
        elif name == "shift":
            out += shift_suite(rng, frames)
        elif name == "gss":
            out += gss_suite(degrees)
        else:
            raise ValueError(f"unknown suite {name!r}")
    return out


def format_checks(checks) -> str:
    lines = []
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append("\t".join([c.name, c.scope, status, c.detail]).rstrip())
    return "\n".join(lines)

