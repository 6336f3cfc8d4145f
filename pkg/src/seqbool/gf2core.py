"""GF(2) bit sequences and the binomial-matrix (subset-lattice) transform.

Bits are stored one per byte in read-only numpy arrays, position 0 first.
The transform kernel works on packed little-endian 64-bit words where
position 0 sits at the least significant bit of word 0; callers never see
the words.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple, Union

import numpy as np

__all__ = [
    "BitSequence",
    "CoeffVector",
    "DomainError",
    "ParseError",
    "SeqStats",
    "binomial_matrix",
    "is_power_of_two",
    "log2_exact",
    "moebius",
    "moebius_batch",
    "pack_words",
    "parse_bits",
    "rotate_left",
    "seq_stats",
    "unpack_words",
]

MATRIX_T_CAP = 12

_WORD = np.dtype("<u8")
# In-word masks selecting positions whose bit b is clear, b = 0..5.
_LOW_MASKS = tuple(
    np.uint64(sum(1 << j for j in range(64) if not (j >> b) & 1)) for b in range(6)
)
_SHIFTS = tuple(np.uint64(1 << b) for b in range(6))


class ParseError(ValueError):
    """Malformed text input."""


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def log2_exact(n: int) -> int:
    if not is_power_of_two(n):
        raise DomainError(f"length {n} is not a power of two")
    return n.bit_length() - 1


class BitSequence:
    """One period (or window) of a binary sequence.

    Immutable; equality and hashing are by content and length.
    """

    __slots__ = ("_bits",)

    def __init__(self, bits: Union[Iterable[int], np.ndarray, "BitSequence"]):
        if isinstance(bits, BitSequence):
            arr = bits._bits
        else:
            arr = np.array(bits, dtype=np.uint8).reshape(-1)
            if arr.size and arr.max() > 1:
                raise DomainError("bit values must be 0 or 1")
            arr.flags.writeable = False
        if arr.size == 0:
            raise DomainError("a bit sequence needs at least one bit")
        self._bits = arr

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitSequence":
        """Bit ``tau`` of the result is bit ``tau`` of ``value``."""
        return cls([(value >> k) & 1 for k in range(length)])

    @classmethod
    def zeros(cls, length: int) -> "BitSequence":
        return cls(np.zeros(length, dtype=np.uint8))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def length(self) -> int:
        return int(self._bits.size)

    @property
    def weight(self) -> int:
        return int(self._bits.sum())

    @property
    def t(self) -> int:
        """log2 of the length; raises DomainError when not a power of two."""
        return log2_exact(self.length)

    def to_int(self) -> int:
        return int.from_bytes(np.packbits(self._bits, bitorder="little").tobytes(), "little")

    def ones(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self._bits))

    def __len__(self) -> int:
        return self.length

    def __iter__(self):
        return (int(b) for b in self._bits)

    def __getitem__(self, tau: int) -> int:
        return int(self._bits[tau])

    def __xor__(self, other: "BitSequence") -> "BitSequence":
        if self.length != other.length:
            raise DomainError("XOR of sequences with different lengths")
        return BitSequence(self._bits ^ other._bits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitSequence):
            return NotImplemented
        return self.length == other.length and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self) -> int:
        return hash((self.length, self._bits.tobytes()))

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self._bits)

    def __repr__(self) -> str:
        return f"BitSequence('{self}')"


# Coefficient vectors (ANF, B-representation, truth table) share the type.
CoeffVector = BitSequence

_SEPARATORS = re.compile(r"[\s,]+")


def parse_bits(text: str) -> BitSequence:
    """Parse '0'/'1' characters; spaces and commas between bits are ignored."""
    cleaned = _SEPARATORS.sub("", text)
    if not cleaned:
        raise ParseError("empty bit string")
    for k, ch in enumerate(cleaned):
        if ch not in "01":
            raise ParseError(f"illegal character {ch!r} at bit index {k}")
    return BitSequence([1 if ch == "1" else 0 for ch in cleaned])


def pack_words(bits: np.ndarray) -> np.ndarray:
    """Pack the last axis of a 0/1 array into little-endian uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8)
    n = bits.shape[-1]
    nwords = max(1, -(-n // 64))
    pad = nwords * 64 - n
    if pad:
        bits = np.concatenate(
            [bits, np.zeros(bits.shape[:-1] + (pad,), dtype=np.uint8)], axis=-1
        )
    packed = np.packbits(bits, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view(_WORD)


def unpack_words(words: np.ndarray, length: int) -> np.ndarray:
    raw = np.ascontiguousarray(words, dtype=_WORD).view(np.uint8)
    return np.unpackbits(raw, axis=-1, bitorder="little")[..., :length]


def _butterfly(words: np.ndarray, t: int) -> None:
    """In-place subset-sum over the bit lattice of positions 0 .. 2**t - 1."""
    for b in range(min(t, 6)):
        words ^= (words & _LOW_MASKS[b]) << _SHIFTS[b]
    nwords = words.shape[-1]
    for b in range(6, t):
        half = 1 << (b - 6)
        view = words.reshape(words.shape[:-1] + (nwords // (2 * half), 2, half))
        view[..., 1, :] ^= view[..., 0, :]


def moebius_batch(rows: np.ndarray) -> np.ndarray:
    """Apply the binomial-matrix transform to every row of a 0/1 array.

    The last axis must have power-of-two length. Returns a new uint8 array.
    """
    rows = np.asarray(rows, dtype=np.uint8)
    n = rows.shape[-1]
    t = log2_exact(n)
    words = pack_words(rows)
    _butterfly(words, t)
    return unpack_words(words, n)


def moebius(v: BitSequence) -> BitSequence:
    """Return ``v . H_t mod 2``.

    Output bit ``tau`` is the XOR of ``v[i]`` over all ``i`` whose set bits
    are a subset of the set bits of ``tau``. The map is its own inverse.

    >>> str(moebius(parse_bits("11100001")))
    '10011000'
    """
    if not isinstance(v, BitSequence):
        v = BitSequence(v)
    return BitSequence(moebius_batch(v.bits))


def binomial_matrix(t: int) -> np.ndarray:
    """The 2**t x 2**t binomial matrix, built by its recursive block rule.

    Only meant for tests and display; refused above t = 12.
    """
    if t < 0:
        raise DomainError("t must be non-negative")
    if t > MATRIX_T_CAP:
        raise DomainError(f"refusing to materialise H_{t}; cap is t = {MATRIX_T_CAP}")
    h = np.ones((1, 1), dtype=np.uint8)
    for _ in range(t):
        zero = np.zeros_like(h)
        h = np.block([[h, h], [zero, h]])
    h.flags.writeable = False
    return h


def rotate_left(s: BitSequence, r: int) -> BitSequence:
    """Cyclic shift: ``out[tau] = s[(tau + r) mod len(s)]``."""
    if r < 0:
        raise DomainError("shift amount must be non-negative")
    return BitSequence(np.roll(s.bits, -(r % s.length)))


class SeqStats(NamedTuple):
    weight: int
    minimal_period: int
    balanced: bool


def minimal_period(s: BitSequence) -> int:
    n = s.length
    bits = s.bits
    for p in range(1, n + 1):
        if n % p == 0 and np.array_equal(bits[p:], bits[:-p]):
            return p
    return n


def seq_stats(s: BitSequence) -> SeqStats:
    w = s.weight
    return SeqStats(w, minimal_period(s), 2 * w == s.length)
