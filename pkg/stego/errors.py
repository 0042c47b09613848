"""Error types shared by the steganography modules and the position-file format.

Every error carries a stable ``exit_code`` that the CLI maps directly to its
process exit status.
"""

from typing import Any


class StegoError(Exception):
    """Base class for all domain errors."""

    exit_code: int = 1

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.details = details


class NonAsciiCharacter(StegoError):
    """A message character lies outside 7-bit ASCII."""

    exit_code = 3

    def __init__(self, index: int, character: str = ""):
        self.index = index
        self.character = character
        super().__init__(
            f"character {character!r} at index {index} is not 7-bit ASCII",
            index=index,
        )


class BitCountNotMultipleOfSeven(StegoError):
    """A bit stream cannot be grouped into 7-bit characters."""

    exit_code = 6

    def __init__(self, length: int):
        self.length = length
        super().__init__(f"bit count {length} is not a multiple of 7", length=length)


class IndexOutOfRange(StegoError):
    """A global sample index falls outside 1..3*width*height."""

    exit_code = 6

    def __init__(self, index: int, maximum: int):
        self.index = index
        self.maximum = maximum
        super().__init__(
            f"index {index} is out of range 1..{maximum}", index=index, maximum=maximum
        )


class InsufficientCapacity(StegoError):
    """The cover ran out of samples before every bit was placed."""

    exit_code = 2

    def __init__(self, bits_matched: int, bits_required: int):
        self.bits_matched = bits_matched
        self.bits_required = bits_required
        super().__init__(
            f"cover capacity exhausted after {bits_matched} of {bits_required} bits",
            bits_matched=bits_matched,
            bits_required=bits_required,
        )


class MalformedImage(StegoError):
    """Image bytes do not form a valid image of the hinted format."""

    exit_code = 4

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"malformed image: {detail}", detail=detail)


class UnsupportedFormat(StegoError):
    """Image format (or pixel mode) is not one we can carry LSBs in."""

    exit_code = 4

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"unsupported image format: {detail}", detail=detail)


class UnsupportedBitDepth(StegoError):
    """Image samples are not 8 bits wide."""

    exit_code = 4

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"unsupported bit depth: {detail}", detail=detail)


class DimensionMismatch(StegoError):
    """Two images that must be compared sample-for-sample differ in size."""

    exit_code = 7

    def __init__(self, first: tuple[int, int], second: tuple[int, int]):
        self.first = first
        self.second = second
        super().__init__(
            f"dimension mismatch: {first[0]}x{first[1]} vs {second[0]}x{second[1]}",
            first=first,
            second=second,
        )


class WrongKey(StegoError):
    """The key verifier stored in a position file does not match the supplied key."""

    exit_code = 5

    def __init__(self):
        super().__init__("wrong secret key")


class MalformedPositionFile(StegoError):
    """Position file bytes are structurally invalid."""

    exit_code = 6

    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"malformed position file: {detail}", detail=detail)


class PositionOutOfRange(StegoError):
    """A position to be sealed exceeds the declared image's sample count."""

    exit_code = 6

    def __init__(self, position: int, maximum: int):
        self.position = position
        self.maximum = maximum
        super().__init__(
            f"position {position} is out of range 1..{maximum}",
            position=position,
            maximum=maximum,
        )
