"""Receiver side: read LSBs at listed positions and rebuild the message."""

from typing import Sequence, Union

import numpy as np

from stego.bitstream import BITS_PER_CHAR, BitStream, decode_bits
from stego.errors import BitCountNotMultipleOfSeven, IndexOutOfRange
from stego.image_model import RasterImage, scan_samples
from stego.matcher import PositionList


def extract_bits(image: RasterImage, positions: Union[PositionList, Sequence[int]]) -> BitStream:
    """LSBs at each position, in list order.

    Raises:
        IndexOutOfRange: a position lies outside 1..3*width*height
    """
    indices = np.asarray(list(positions), dtype=np.int64)
    if indices.size == 0:
        return BitStream()
    maximum = image.sample_count
    bad = np.flatnonzero((indices < 1) | (indices > maximum))
    if bad.size:
        raise IndexOutOfRange(int(indices[bad[0]]), maximum)
    return BitStream.from_array(scan_samples(image)[indices - 1] & 1)


def extract_message(image: RasterImage, positions: Union[PositionList, Sequence[int]]) -> str:
    """Recover the text hidden by :func:`stego.matcher.match_positions`.

    A position list read against the wrong image yields different text, not an error.

    Raises:
        BitCountNotMultipleOfSeven, IndexOutOfRange
    """
    count = len(positions)
    if count % BITS_PER_CHAR:
        raise BitCountNotMultipleOfSeven(count)
    return decode_bits(extract_bits(image, positions))


def split_bound_name(text: str, name_length: int) -> tuple[str, str]:
    """Split extracted text into (message, bound image name)."""
    if name_length < 0 or name_length > len(text):
        raise ValueError(f"name length {name_length} does not fit text of length {len(text)}")
    if name_length == 0:
        return text, ""
    return text[:-name_length], text[-name_length:]
