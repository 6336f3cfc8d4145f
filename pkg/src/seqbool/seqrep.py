"""B-representation and reverse-ANF (r-ANF) of period-2^t sequences.

A sequence of period dividing ``T = 2**t`` is a unique GF(2) sum of the
binomial sequences C(n, i), i < T. Its B-representation is that index
set. The r-ANF reads the very same index set as monomials, index ``i``
standing for the product of ``x_{j+1}`` over the set bits ``j`` of ``i``
(index 5 = 0b101 is ``x3*x1``). Unlike the ANF rule this does not depend
on a variable count, so each sequence gets exactly one polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Union

import numpy as np

from .binomials import binomial_meta
from .boolrep import AnfForm, split_terms
from .gf2core import (
    BitSequence,
    DomainError,
    ParseError,
    is_power_of_two,
    log2_exact,
    moebius,
)

__all__ = [
    "BinomialCombo",
    "RanfPolynomial",
    "SequenceProfile",
    "anf_of_sequence",
    "brep_from_ranf",
    "brep_from_sequence",
    "extend_frame",
    "format_brep",
    "format_ranf",
    "parse_brep",
    "parse_ranf",
    "profile",
    "profile_of",
    "ranf_from_brep",
    "ranf_truth_tables",
    "sequence_from_brep",
    "sequence_from_ranf",
]


def _xor_support(indices) -> tuple[int, ...]:
    """Sorted indices that occur an odd number of times."""
    arr = np.fromiter(indices, dtype=np.int64)
    if arr.size == 0:
        return ()
    odd = np.flatnonzero(np.bincount(arr) & 1)
    return tuple(int(i) for i in odd)


@dataclass(frozen=True)
class BinomialCombo:
    """Support of a B-representation inside a frame of length ``frame``."""

    frame: int
    support: tuple[int, ...]

    def __post_init__(self):
        if not is_power_of_two(self.frame):
            raise DomainError(f"frame {self.frame} is not a power of two")
        s = tuple(int(i) for i in self.support)
        if any(b <= a for a, b in zip(s, s[1:])):
            raise DomainError("support must be strictly increasing")
        if s and (s[0] < 0 or s[-1] >= self.frame):
            raise DomainError(f"support index outside frame {self.frame}")
        object.__setattr__(self, "support", s)

    @classmethod
    def from_indices(cls, indices, frame: int) -> "BinomialCombo":
        """Build from any iterable; repeated indices cancel in pairs."""
        return cls(frame, _xor_support(indices))

    def coeffs(self) -> BitSequence:
        c = np.zeros(self.frame, dtype=np.uint8)
        c[list(self.support)] = 1
        return BitSequence(c)

    def __xor__(self, other: "BinomialCombo") -> "BinomialCombo":
        if self.frame != other.frame:
            raise DomainError("frames differ")
        return BinomialCombo(self.frame, tuple(sorted(set(self.support) ^ set(other.support))))

    def __len__(self) -> int:
        return len(self.support)

    def __str__(self) -> str:
        return format_brep(self)


@dataclass(frozen=True)
class RanfPolynomial:
    """Set of r-ANF monomials, each identified by its integer index."""

    monomials: frozenset

    def __init__(self, monomials=()):
        object.__setattr__(self, "monomials", frozenset(int(i) for i in monomials))
        if any(i < 0 for i in self.monomials):
            raise DomainError("monomial indices are non-negative")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(self.monomials))

    def __xor__(self, other: "RanfPolynomial") -> "RanfPolynomial":
        return RanfPolynomial(self.monomials ^ other.monomials)

    def __len__(self) -> int:
        return len(self.monomials)

    @property
    def max_subscript(self) -> int:
        return max(self.monomials, default=0).bit_length()

    def minimal_frame(self) -> int:
        return 1 << self.max_subscript

    def __str__(self) -> str:
        return format_ranf(self)


class SequenceProfile(NamedTuple):
    lc: int
    period: int
    balanced: bool
    max_anf_degree: bool
    last_coeff_present: bool


def brep_from_sequence(s: BitSequence) -> BinomialCombo:
    if not is_power_of_two(s.length):
        raise DomainError(
            f"sequence length {s.length} is not a power of two; pass a window of "
            "2**t terms covering whole periods"
        )
    return BinomialCombo(s.length, moebius(s).ones())


def sequence_from_brep(b: BinomialCombo) -> BitSequence:
    return moebius(b.coeffs())


def extend_frame(b: BinomialCombo, frame: int) -> BinomialCombo:
    """Same sequence, larger window: the support does not change."""
    if frame < b.frame:
        raise DomainError("use a frame at least as large as the current one")
    return BinomialCombo(frame, b.support)


def ranf_from_brep(b: BinomialCombo) -> RanfPolynomial:
    return RanfPolynomial(b.support)


def brep_from_ranf(p: RanfPolynomial, frame: int) -> BinomialCombo:
    if p.monomials and max(p.monomials) >= frame:
        raise DomainError(
            f"frame {frame} too small for monomial index {max(p.monomials)}; "
            f"need at least {p.minimal_frame()}"
        )
    return BinomialCombo(frame, p.indices)


def sequence_from_ranf(p: RanfPolynomial, frame: int) -> BitSequence:
    """Truth table of the r-ANF, counting inputs with x1 as the low bit.

    Evaluates each monomial directly rather than going through the
    transform, so it doubles as a check on :func:`sequence_from_brep`.
    """
    if not is_power_of_two(frame):
        raise DomainError(f"frame {frame} is not a power of two")
    if p.monomials and max(p.monomials) >= frame:
        raise DomainError(f"frame {frame} too small for monomial index {max(p.monomials)}")
    tau = np.arange(frame, dtype=np.int64)
    out = np.zeros(frame, dtype=np.uint8)
    for i in p.monomials:
        out ^= ((tau & i) == i).astype(np.uint8)
    return BitSequence(out)


def ranf_truth_tables(coeff_rows) -> np.ndarray:
    """Evaluate many r-ANFs at once, one coefficient vector per row.

    Dense product with the monomial evaluation table; independent of the
    butterfly used by :func:`sequence_from_brep`.
    """
    rows = np.asarray(coeff_rows, dtype=np.uint8)
    frame = rows.shape[-1]
    if not is_power_of_two(frame):
        raise DomainError(f"frame {frame} is not a power of two")
    idx = np.arange(frame, dtype=np.int64)
    table = ((idx[None, :] & idx[:, None]) == idx[:, None]).astype(np.int64)
    return ((rows.astype(np.int64) @ table) & 1).astype(np.uint8)


def anf_of_sequence(s: BitSequence) -> AnfForm:
    """The Boolean function whose ANF coefficient vector is ``s`` itself."""
    return AnfForm(s, log2_exact(s.length))


def profile(x: Union[BitSequence, BinomialCombo]) -> SequenceProfile:
    if isinstance(x, BinomialCombo):
        return profile_of(sequence_from_brep(x), x)
    return profile_of(x, brep_from_sequence(x))


def profile_of(s: BitSequence, b: BinomialCombo) -> SequenceProfile:
    """Profile from a sequence and its already computed B-representation."""
    if b.support:
        top = b.support[-1]
        lc, period = top + 1, binomial_meta(top).period
    else:
        lc, period = 0, 1
    return SequenceProfile(
        lc=lc,
        period=period,
        balanced=2 * s.weight == s.length,
        max_anf_degree=len(b.support) % 2 == 1,
        last_coeff_present=(b.frame - 1) in b.support,
    )


_BREP_TEXT = re.compile(r"^\(?\s*([\d\s,]*)\)?$")


def parse_brep(text: str, frame: int | None = None) -> BinomialCombo:
    """Parse ``"(0,3,4)"``; the frame defaults to the smallest one that fits."""
    m = _BREP_TEXT.match(text.strip())
    if not m:
        raise ParseError(f"bad B-representation {text!r}; expected e.g. (0,3,4)")
    parts = [p for p in re.split(r"[\s,]+", m.group(1)) if p]
    indices = [int(p) for p in parts]
    if len(set(indices)) != len(indices):
        raise ParseError("repeated index in B-representation")
    if frame is None:
        frame = 1 << max((i.bit_length() for i in indices), default=0)
    return BinomialCombo(frame, tuple(sorted(indices)))


def format_brep(b: BinomialCombo) -> str:
    return "(" + ",".join(map(str, b.support)) + ")"


def parse_ranf(text: str) -> RanfPolynomial:
    """Parse r-ANF text such as ``"1 + x1 + x2*x1 + x3"``; equal terms cancel."""
    terms = split_terms(text)
    indices = []
    for term in terms:
        if any(k == 0 for k in term):
            raise ParseError("variable index 0 is not allowed; variables start at x1")
        indices.append(sum(1 << (k - 1) for k in term))
    return RanfPolynomial(_xor_support(indices))


def _ranf_monomial(i: int) -> str:
    if i == 0:
        return "1"
    return "*".join(f"x{j + 1}" for j in reversed(range(i.bit_length())) if (i >> j) & 1)


def format_ranf(p: RanfPolynomial) -> str:
    """Ascending index order, subscripts descending inside a monomial."""
    if not p.monomials:
        return "0"
    return " + ".join(_ranf_monomial(i) for i in p.indices)
