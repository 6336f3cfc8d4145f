"""Truth table, ANF and minterm views of a Boolean function.

ANF monomial convention: in ``n`` variables, coefficient index ``i`` is
read as the n-digit binary word ``u_1 u_2 ... u_n`` with ``u_1`` the most
significant digit, and its monomial contains ``x_k`` iff ``u_k = 1``.
So for n = 4 index 3 (0011) is ``x3*x4`` and index 4 (0100) is ``x2``.
The same index means a different monomial for a different ``n``, which is
why :class:`AnfForm` always carries its variable count.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .gf2core import BitSequence, DomainError, ParseError, log2_exact, moebius

__all__ = [
    "AnfForm",
    "TruthTable",
    "anf_degree",
    "anf_to_tt",
    "format_anf",
    "minterm_support",
    "monomial_index",
    "monomial_variables",
    "parse_anf",
    "tt_to_anf",
]

TruthTable = BitSequence


@dataclass(frozen=True)
class AnfForm:
    coeffs: BitSequence
    nvars: int

    def __post_init__(self):
        if self.coeffs.length != 1 << self.nvars:
            raise DomainError(
                f"ANF with {self.nvars} variables needs {1 << self.nvars} coefficients, "
                f"got {self.coeffs.length}"
            )

    @classmethod
    def from_support(cls, support, nvars: int) -> "AnfForm":
        bits = np.zeros(1 << nvars, dtype=np.uint8)
        for i in support:
            if not 0 <= i < 1 << nvars:
                raise DomainError(f"monomial index {i} out of range for {nvars} variables")
            bits[i] ^= 1
        return cls(BitSequence(bits), nvars)

    @property
    def support(self) -> tuple[int, ...]:
        return self.coeffs.ones()

    @property
    def degree(self) -> int:
        return anf_degree(self)

    def __str__(self) -> str:
        return format_anf(self)


def monomial_variables(i: int, nvars: int) -> tuple[int, ...]:
    """Variable subscripts of ANF monomial ``i``, ascending."""
    return tuple(k for k in range(1, nvars + 1) if (i >> (nvars - k)) & 1)


def monomial_index(variables, nvars: int) -> int:
    i = 0
    for k in variables:
        i |= 1 << (nvars - k)
    return i


def anf_degree(a: AnfForm) -> int:
    """Largest monomial degree; the zero function gets degree 0."""
    return max((bin(i).count("1") for i in a.support), default=0)


def anf_to_tt(a: AnfForm) -> TruthTable:
    return moebius(a.coeffs)


def tt_to_anf(tt: TruthTable) -> AnfForm:
    return AnfForm(moebius(tt), log2_exact(tt.length))


def minterm_support(tt: TruthTable) -> tuple[int, ...]:
    return tt.ones()


_VAR = re.compile(r"x(\d+)")
_PRODUCT_SEP = re.compile(r"[*·\s]+")


def _parse_term(term: str, pos: int) -> list[int]:
    if term == "1":
        return []
    compact = _PRODUCT_SEP.sub("", term)
    variables: list[int] = []
    at = 0
    while at < len(compact):
        m = _VAR.match(compact, at)
        if not m:
            raise ParseError(f"bad token {compact[at:]!r} in term {pos + 1}")
        variables.append(int(m.group(1)))
        at = m.end()
    if len(set(variables)) != len(variables):
        raise ParseError(f"repeated variable in term {pos + 1}: {term!r}")
    return variables


def split_terms(text: str) -> list[list[int]]:
    """Split polynomial text into variable lists; ``[]`` is the constant 1."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial")
    if text == "0":
        return []
    terms = []
    for pos, raw in enumerate(text.split("+")):
        term = raw.strip()
        if not term:
            raise ParseError(f"empty term at position {pos + 1}")
        terms.append(_parse_term(term, pos))
    return terms


def parse_anf(text: str, nvars: int | None = None) -> AnfForm:
    """Parse e.g. ``"1 + x4 + x2*x3*x4 + x1*x2"``.

    Repeated monomials cancel (GF(2) sum). Without ``nvars`` the largest
    subscript present is used.
    """
    terms = split_terms(text)
    used = [k for term in terms for k in term]
    if any(k == 0 for k in used):
        raise ParseError("variable index 0 is not allowed; variables start at x1")
    if nvars is None:
        nvars = max(used, default=0)
    bad = [k for k in used if k > nvars]
    if bad:
        raise ParseError(f"variable x{bad[0]} exceeds the declared {nvars} variables")
    return AnfForm.from_support((monomial_index(t, nvars) for t in terms), nvars)


def format_anf(a: AnfForm) -> str:
    terms = []
    for i in a.support:
        variables = monomial_variables(i, a.nvars)
        terms.append("*".join(f"x{k}" for k in variables) if variables else "1")
    return " + ".join(terms) if terms else "0"
