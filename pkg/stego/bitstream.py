"""7-bit ASCII text <-> bit stream conversion (MSB first per character)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from stego.errors import BitCountNotMultipleOfSeven, NonAsciiCharacter

BITS_PER_CHAR = 7
MAX_ASCII = 0x7F


@dataclass(frozen=True)
class BitStream:
    """Ordered secret-message bits.

    Only the 0/1 element invariant is enforced here. Streams read back by the
    baseline extractor may have any length; the multiple-of-7 law applies where
    bits are turned into text.
    """

    bits: tuple[int, ...] = ()

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise ValueError(f"bit {i} has value {b}; expected 0 or 1")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, text: str) -> BitStream:
        """Parse a listing such as ``"1001000 1100101"`` (whitespace ignored)."""
        digits = "".join(text.split())
        if any(c not in "01" for c in digits):
            raise ValueError(f"not a binary listing: {text!r}")
        return cls(tuple(int(c) for c in digits))

    @classmethod
    def from_array(cls, array: np.ndarray) -> BitStream:
        return cls(tuple(int(b) for b in np.asarray(array).ravel()))

    def as_array(self) -> np.ndarray:
        return np.fromiter(self.bits, dtype=np.uint8, count=len(self.bits))

    def groups(self) -> list[str]:
        """7-bit groups as strings, e.g. ["1001000", "1100101"]."""
        text = str(self)
        return [text[i : i + BITS_PER_CHAR] for i in range(0, len(text), BITS_PER_CHAR)]

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __getitem__(self, index: int) -> int:
        return self.bits[index]

    def __str__(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)


BitsLike = Union[BitStream, Sequence[int], Iterable[int]]


def encode_text(text: str) -> BitStream:
    """Encode ASCII text as 7 bits per character, most-significant bit first.

    Raises:
        NonAsciiCharacter: a character's code point exceeds 127
    """
    bits: list[int] = []
    for index, char in enumerate(text):
        code = ord(char)
        if code > MAX_ASCII:
            raise NonAsciiCharacter(index, char)
        bits.extend((code >> shift) & 1 for shift in range(BITS_PER_CHAR - 1, -1, -1))
    return BitStream(tuple(bits))


def decode_bits(bits: BitsLike) -> str:
    """Group bits in sevens (MSB first) and turn each group into a character.

    Raises:
        BitCountNotMultipleOfSeven: the stream length is not a multiple of 7
    """
    values = bits.bits if isinstance(bits, BitStream) else tuple(int(b) for b in bits)
    if len(values) % BITS_PER_CHAR:
        raise BitCountNotMultipleOfSeven(len(values))

    chars = []
    for start in range(0, len(values), BITS_PER_CHAR):
        code = 0
        for b in values[start : start + BITS_PER_CHAR]:
            if b not in (0, 1):
                raise ValueError(f"bit value {b} is not 0 or 1")
            code = (code << 1) | b
        chars.append(chr(code))
    return "".join(chars)


def ensure_ascii(text: str) -> None:
    """Raise NonAsciiCharacter for the first character above 127."""
    for index, char in enumerate(text):
        if ord(char) > MAX_ASCII:
            raise NonAsciiCharacter(index, char)
