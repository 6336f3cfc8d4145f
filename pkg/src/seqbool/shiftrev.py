"""Cyclic shifts and reversal computed directly on B-representations.

Shifting C(n, k) left by r gives the sum of C(n, k - i) over the i <= k
for which C(r, i) is odd, i.e. over the ones of Sierpinski row r.
Reversing C(n, k) gives the sum of C(n, i) over the ones of row k.
Neither operator ever builds the bit sequence.
"""

from __future__ import annotations

import numpy as np

from .binomials import submasks
from .gf2core import BitSequence, DomainError
from .seqrep import BinomialCombo

__all__ = ["reverse_brep", "reverse_sequence", "shift_brep", "shift_brep_right"]


def _accumulate(frame: int, pieces: list[np.ndarray]) -> BinomialCombo:
    if not pieces:
        return BinomialCombo(frame, ())
    counts = np.bincount(np.concatenate(pieces), minlength=frame)
    return BinomialCombo(frame, tuple(int(i) for i in np.flatnonzero(counts & 1)))


def shift_brep(b: BinomialCombo, r: int) -> BinomialCombo:
    """B-representation of the sequence rotated ``r`` places to the left."""
    if r < 0:
        raise DomainError("shift amount must be non-negative; use shift_brep_right")
    r %= b.frame
    if r == 0:
        return b
    row = submasks(r)
    pieces = [k - row[row <= k] for k in b.support]
    return _accumulate(b.frame, pieces)


def shift_brep_right(b: BinomialCombo, r: int) -> BinomialCombo:
    return shift_brep(b, (b.frame - r % b.frame) % b.frame)


def reverse_sequence(s: BitSequence) -> BitSequence:
    return BitSequence(s.bits[::-1])


def reverse_brep(b: BinomialCombo) -> BinomialCombo:
    """B-representation of the reversed period (``s*[tau] = s[T-1-tau]``)."""
    return _accumulate(b.frame, [submasks(k) for k in b.support])
