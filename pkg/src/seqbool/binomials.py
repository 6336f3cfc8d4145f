"""Binomial sequences C(n, i) mod 2 and rows of the binary Sierpinski triangle."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .gf2core import BitSequence, DomainError, is_power_of_two

__all__ = [
    "BinomialMeta",
    "BinomialWindow",
    "SierpinskiRow",
    "binomial_meta",
    "binomial_sequence",
    "binomial_window",
    "sierpinski_row",
    "submasks",
]

SIERPINSKI_CAP = 1 << 20


class BinomialMeta(NamedTuple):
    period: int
    lc: int


class BinomialWindow(NamedTuple):
    bits: BitSequence
    period: int
    lc: int
    truncated: bool  # window shorter than one full period


def binomial_meta(i: int) -> BinomialMeta:
    """Period and linear complexity of the i-th binomial sequence."""
    if i < 0:
        raise DomainError("binomial index must be non-negative")
    # smallest power of two strictly greater than i
    return BinomialMeta(1 << i.bit_length(), i + 1)


def binomial_sequence(i: int, T: int) -> BitSequence:
    """First T terms of C(n, i) mod 2.

    By Lucas' theorem term j is 1 exactly when the set bits of i are a
    subset of those of j.
    """
    if i < 0:
        raise DomainError("binomial index must be non-negative")
    if not is_power_of_two(T):
        raise DomainError(f"window length {T} is not a power of two")
    j = np.arange(T, dtype=np.int64)
    return BitSequence(((j & i) == i).astype(np.uint8))


def binomial_window(i: int, T: int) -> BinomialWindow:
    meta = binomial_meta(i)
    return BinomialWindow(binomial_sequence(i, T), meta.period, meta.lc, T < meta.period)


class SierpinskiRow(NamedTuple):
    r: int
    bits: tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def sierpinski_row(r: int) -> SierpinskiRow:
    """Row r of Pascal's triangle mod 2: entry k is 1 iff k & r == k."""
    if r < 0:
        raise DomainError("row index must be non-negative")
    if r > SIERPINSKI_CAP:
        raise DomainError(f"row {r} above cap {SIERPINSKI_CAP}")
    k = np.arange(r + 1, dtype=np.int64)
    return SierpinskiRow(r, tuple(int(b) for b in ((k & r) == k)))


def submasks(r: int) -> np.ndarray:
    """All k with k & r == k, ascending; these are the ones of row r."""
    out = [0]
    for b in range(r.bit_length()):
        if (r >> b) & 1:
            out += [x | (1 << b) for x in out]
    return np.array(sorted(out), dtype=np.int64)
