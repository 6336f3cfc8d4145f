"""Maximal-length LFSRs and the generalized self-shrinking generator (GSSG).

Polynomials over GF(2) are handled as Python ints, bit j holding the
coefficient of x^j.

The PN-sequence of ``p(x) = x^L + a_{L-1} x^{L-1} + ... + a_0`` obeys
``u[t+L] = sum_j a_j u[t+j]`` and starts with the given state. For a
vector ``G = (g_0, ..., g_{L-1})`` the GSSG forms
``v[t] = sum_j g_j u[t-j]`` (indices mod 2^L - 1) and keeps ``v[t]``
exactly when ``u[t] = 1``. G is written as the bit string
``g_0 g_1 ... g_{L-1}``; with the all-ones start state and
p(x) = x^4 + x + 1 this reproduces the published family table row for row.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .gf2core import BitSequence, DomainError, ParseError, moebius_batch
from .seqrep import BinomialCombo, RanfPolynomial, SequenceProfile, profile_of, ranf_from_brep

__all__ = [
    "CharPolynomial",
    "Check",
    "GssFamily",
    "GssMember",
    "VerificationReport",
    "format_g",
    "gss_family",
    "gss_member",
    "gss_sequence",
    "is_primitive",
    "linear_complexity",
    "parse_g",
    "parse_poly",
    "pn_sequence",
    "primitive_polynomials",
    "v_stream",
    "verify_gss_properties",
]

MIN_DEGREE, MAX_DEGREE = 2, 24


# -- GF(2)[x] arithmetic on ints ---------------------------------------------

def _mulmod(a: int, b: int, mod: int) -> int:
    deg = mod.bit_length() - 1
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if (a >> deg) & 1:
            a ^= mod
    return out


def _powmod(base: int, e: int, mod: int) -> int:
    out = 1
    while e:
        if e & 1:
            out = _mulmod(out, base, mod)
        base = _mulmod(base, base, mod)
        e >>= 1
    return out


def _polymod(a: int, mod: int) -> int:
    dm = mod.bit_length()
    while a.bit_length() >= dm:
        a ^= mod << (a.bit_length() - dm)
    return a


def _polygcd(a: int, b: int) -> int:
    while b:
        a, b = b, _polymod(a, b)
    return a


@lru_cache(maxsize=None)
def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return tuple(out)


# -- characteristic polynomials ------------------------------------------------

@dataclass(frozen=True)
class CharPolynomial:
    """``x^L + a_{L-1} x^{L-1} + ... + a_1 x + a_0``; ``taps[j] = a_j``."""

    taps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "taps", tuple(int(a) & 1 for a in self.taps))
        if len(self.taps) < 1:
            raise DomainError("polynomial degree must be at least 1")

    @property
    def degree(self) -> int:
        return len(self.taps)

    @classmethod
    def from_int(cls, value: int) -> "CharPolynomial":
        L = value.bit_length() - 1
        return cls(tuple((value >> j) & 1 for j in range(L)))

    def to_int(self) -> int:
        return (1 << self.degree) | sum(a << j for j, a in enumerate(self.taps))

    def __str__(self) -> str:
        terms = [f"x^{self.degree}"]
        for j in range(self.degree - 1, -1, -1):
            if self.taps[j]:
                terms.append("1" if j == 0 else "x" if j == 1 else f"x^{j}")
        return "+".join(terms)


_POLY_TERM = re.compile(r"^(?:1|x(?:\^?(\d+))?)$")


def parse_poly(text: str) -> CharPolynomial:
    """Parse ``"x^4+x+1"`` (any term order, ``x4`` also accepted)."""
    exps = []
    for raw in text.replace(" ", "").split("+"):
        m = _POLY_TERM.match(raw)
        if not m:
            raise ParseError(f"bad polynomial term {raw!r} in {text!r}")
        exps.append(0 if raw == "1" else int(m.group(1) or 1))
    if len(set(exps)) != len(exps):
        raise ParseError(f"repeated term in {text!r}")
    value = sum(1 << e for e in exps)
    if value < 2:
        raise ParseError(f"{text!r} has degree 0")
    return CharPolynomial.from_int(value)


def _check_degree(L: int) -> None:
    if not MIN_DEGREE <= L <= MAX_DEGREE:
        raise DomainError(f"degree {L} outside supported range {MIN_DEGREE}..{MAX_DEGREE}")


def is_primitive(p: CharPolynomial) -> bool:
    """Irreducible and x has multiplicative order exactly 2^L - 1 mod p."""
    L = p.degree
    _check_degree(L)
    if p.taps[0] == 0:
        return False
    mod = p.to_int()
    # Rabin irreducibility test
    if _powmod(2, 1 << L, mod) != 2:
        return False
    for q in _prime_factors(L):
        h = _powmod(2, 1 << (L // q), mod) ^ 2
        if _polygcd(mod, h) != 1:
            return False
    order = (1 << L) - 1
    if _powmod(2, order, mod) != 1:
        return False
    return all(_powmod(2, order // q, mod) != 1 for q in _prime_factors(order))


@lru_cache(maxsize=None)
def primitive_polynomials(L: int) -> tuple[CharPolynomial, ...]:
    _check_degree(L)
    candidates = (CharPolynomial.from_int((1 << L) | (m << 1) | 1) for m in range(1 << (L - 1)))
    return tuple(p for p in candidates if is_primitive(p))


# -- sequences -----------------------------------------------------------------

def _as_bits(state, L: int) -> tuple[int, ...]:
    if isinstance(state, str):
        state = [int(c) for c in state]
    bits = tuple(int(b) for b in state)
    if len(bits) != L or any(b not in (0, 1) for b in bits):
        raise DomainError(f"expected {L} bits, got {state!r}")
    return bits


def pn_sequence(p: CharPolynomial, state, length: int | None = None) -> BitSequence:
    """LFSR output seeded with ``state`` (u_0 .. u_{L-1}); one period by default."""
    L = p.degree
    u = list(_as_bits(state, L))
    if not any(u):
        raise DomainError("the all-zero state only produces the zero sequence")
    if length is None:
        length = (1 << L) - 1
    taps = [j for j, a in enumerate(p.taps) if a]
    while len(u) < length:
        t = len(u) - L
        bit = 0
        for j in taps:
            bit ^= u[t + j]
        u.append(bit)
    return BitSequence(u[:length])


def linear_complexity(s) -> int:
    """Berlekamp-Massey over GF(2)."""
    c, b = 1, 1
    L, m = 0, 1
    window = 0
    for i, bit in enumerate(s):
        window = (window << 1) | int(bit)
        if (c & window).bit_count() & 1:
            prev = c
            c ^= b << m
            if 2 * L <= i:
                L, b, m = i + 1 - L, prev, 1
            else:
                m += 1
        else:
            m += 1
    return L


def parse_g(text: str, L: int | None = None) -> tuple[int, ...]:
    """G text ``g_0 g_1 ... g_{L-1}`` (leftmost character is g_0)."""
    text = text.strip()
    if not text or any(ch not in "01" for ch in text):
        raise ParseError(f"G must be a bit string, got {text!r}")
    if L is not None and len(text) != L:
        raise ParseError(f"G needs {L} bits, got {len(text)}")
    return tuple(int(ch) for ch in text)


def format_g(g: Sequence[int]) -> str:
    return "".join(str(b) for b in g)


def _g_matrix(L: int) -> np.ndarray:
    """All G vectors ordered by their text, shape (2^L, L)."""
    idx = np.arange(1 << L)
    return ((idx[:, None] >> (L - 1 - np.arange(L))) & 1).astype(np.uint8)


def _v_streams(u: np.ndarray, gs: np.ndarray) -> np.ndarray:
    """v[t] = sum_j g_j u[t-j] for every row of ``gs``."""
    L = gs.shape[-1]
    shifted = np.stack([np.roll(u, j) for j in range(L)])  # row j: u[t-j]
    return (gs.astype(np.int64) @ shifted.astype(np.int64) & 1).astype(np.uint8)


def v_stream(u: BitSequence, g: Sequence[int]) -> BitSequence:
    g = np.asarray(g, dtype=np.uint8)
    return BitSequence(_v_streams(u.bits, g[None, :])[0])


def _check_pn_length(u: BitSequence, L: int) -> None:
    if u.length != (1 << L) - 1:
        raise DomainError(f"PN period for degree {L} is {(1 << L) - 1}, got {u.length} bits")
    if u.weight != 1 << (L - 1):
        raise DomainError(f"a PN period of degree {L} has {1 << (L - 1)} ones, got {u.weight}")


def gss_sequence(u: BitSequence, g: Sequence[int]) -> BitSequence:
    """Decimate the G-combination of ``u`` at the ones of ``u``."""
    L = len(g)
    _check_pn_length(u, L)
    v = v_stream(u, g)
    return BitSequence(v.bits[u.bits == 1])


# -- families --------------------------------------------------------------------

@dataclass(frozen=True)
class GssMember:
    g: tuple[int, ...]
    sequence: BitSequence
    brep: BinomialCombo
    ranf: RanfPolynomial
    profile: SequenceProfile

    @property
    def g_text(self) -> str:
        return format_g(self.g)

    @property
    def is_generalized(self) -> bool:
        # the zero sequence (G = 0) is not a member of the family
        return any(self.g)


def _member(g, seq_bits: np.ndarray, coeffs: np.ndarray) -> GssMember:
    frame = seq_bits.size
    brep = BinomialCombo(frame, tuple(int(i) for i in np.flatnonzero(coeffs)))
    seq = BitSequence(seq_bits)
    return GssMember(tuple(int(x) for x in g), seq, brep, ranf_from_brep(brep), profile_of(seq, brep))


@dataclass(frozen=True)
class GssFamily:
    poly: CharPolynomial
    state: tuple[int, ...]
    pn: BitSequence
    members: dict = field(hash=False)  # G text -> GssMember, in G text order

    @property
    def degree(self) -> int:
        return self.poly.degree

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members.values())

    def __getitem__(self, g) -> GssMember:
        key = g if isinstance(g, str) else format_g(g)
        return self.members[key]

    def find(self, seq: BitSequence) -> GssMember | None:
        for m in self.members.values():
            if m.sequence == seq:
                return m
        return None


def _default_state(L: int) -> tuple[int, ...]:
    return (1,) * L


def gss_family(p: CharPolynomial, state=None) -> GssFamily:
    L = p.degree
    if not is_primitive(p):
        raise DomainError(f"{p} is not primitive")
    state = _default_state(L) if state is None else _as_bits(state, L)
    u = pn_sequence(p, state)
    gs = _g_matrix(L)[1:]
    seqs = _v_streams(u.bits, gs)[:, u.bits == 1]
    coeffs = moebius_batch(seqs)
    members = {format_g(g): _member(g, s, c) for g, s, c in zip(gs, seqs, coeffs)}
    return GssFamily(p, state, u, members)


def gss_member(p: CharPolynomial, g, state=None) -> GssMember:
    """A single generator output; G = 0 yields the zero sequence, flagged."""
    L = p.degree
    g = parse_g(g, L) if isinstance(g, str) else _as_bits(g, L)
    state = _default_state(L) if state is None else _as_bits(state, L)
    u = pn_sequence(p, state)
    seq = gss_sequence(u, g)
    return _member(g, seq.bits, moebius_batch(seq.bits))


# -- theorem checks --------------------------------------------------------------

class Check(NamedTuple):
    name: str
    scope: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    poly: str
    state: str
    checks: list = field(default_factory=list)
    observations: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, scope: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, scope, bool(passed), detail))


def _row_periods(rows: np.ndarray) -> np.ndarray:
    """Minimal period of each row, rows having power-of-two length."""
    n = rows.shape[1]
    periods = np.full(rows.shape[0], n)
    p = n // 2
    while p:
        fits = (rows[:, p:] == rows[:, :-p]).all(axis=1) & (periods == 2 * p)
        periods[fits] = p
        p //= 2
    return periods


@lru_cache(maxsize=None)
def _circulant(n: int) -> np.ndarray:
    """Row r indexes the rotation of a length-n sequence by r to the left."""
    return (np.arange(n)[:, None] + np.arange(n)[None, :]) % n


def verify_gss_properties(fam: GssFamily) -> VerificationReport:
    """Run the family theorems; failures are recorded, never raised.

    The numbered properties are: (1) group closure, (2) balancedness,
    (3) period divides 2^(L-1), (4) trivial r-ANFs, (5) monomial count,
    (6) largest variable subscript, (7) no maximum monomial, (8) the +1
    partner, (9) monomial-count and LC bound, (10) half the shifts of a
    full-period member carry the constant monomial. Item (11) is an
    observation log only: period 2^(L-1) and LC >= 2^(L-2) are open
    conjectures for non-trivial members.
    """
    L = fam.degree
    half = 1 << (L - 1)
    bound = half - (L - 2)
    rep = VerificationReport(str(fam.poly), format_g(fam.state))
    members = list(fam)
    by_int = {m.sequence.to_int(): m for m in members}
    group = set(by_int) | {0}

    bad = next(((a, b) for a in group for b in group if a ^ b not in group), None)
    closure_ok = len(members) == (1 << L) - 1 and bad is None
    rep.add("p1_group_closure", "family", closure_ok,
            "" if bad is None else f"{bad[0]:0{half}b} ^ {bad[1]:0{half}b} not in family")

    ranfs = {m.ranf.monomials for m in members}
    seqs = np.stack([m.sequence.bits for m in members])
    periods = _row_periods(seqs)
    full = np.flatnonzero(periods == half)
    # constant-term count over all rotations of every full-period member at once
    rot = seqs[full][:, _circulant(half)].reshape(-1, half)
    consts = moebius_batch(rot)[:, 0].reshape(len(full), half).sum(axis=1)
    const_of = dict(zip(full.tolist(), consts.tolist()))
    observed_full = observed_lc = 0
    nontrivial = 0
    for k, m in enumerate(members):
        scope = f"G={m.g_text}"
        brep, prof = m.brep, m.profile
        period = int(periods[k])
        is_ones = m.sequence.weight == half
        if not is_ones:
            rep.add("p2_balanced", scope, prof.balanced, f"weight {m.sequence.weight}")
        rep.add("p3_period_divides", scope, half % period == 0, f"period {period}")
        if period <= 2:
            rep.add("p4_trivial_ranf", scope, brep.support in ((0,), (1,), (0, 1)), str(brep))
        else:
            nontrivial += 1
            observed_full += period == half
            observed_lc += prof.lc >= half // 2
        rep.add("p5_monomial_count", scope, len(m.ranf) == len(brep.support))
        rep.add("p6_max_subscript", scope, m.ranf.max_subscript <= L - 1,
                f"max subscript {m.ranf.max_subscript}")
        rep.add("p7_no_max_term", scope, (half - 1) not in brep.support)
        partner = m.ranf.monomials ^ {0}
        # the all-ones member's partner is the null sequence, outside the family proper
        ok = partner in ranfs or not partner
        rep.add("p8_plus_one_partner", scope, ok,
                "" if ok else f"missing {RanfPolynomial(partner)}")
        rep.add("p9_bound", scope, len(brep.support) <= bound and prof.lc <= bound,
                f"|b|={len(brep.support)} lc={prof.lc} bound={bound}")
        if period == half:
            with_const = const_of[k]
            rep.add("p10_shifts_with_constant", scope, with_const == half // 2,
                    f"{with_const} of {half}")

    rep.observations = {
        "nontrivial_members": nontrivial,
        "period_equals_2^(L-1)": observed_full,
        "lc_at_least_2^(L-2)": observed_lc,
    }
    return rep
