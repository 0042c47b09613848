"""Position matching: find cover samples whose LSBs already spell the secret.

The cover is never written to. A single forward cursor walks the G->R->B scan
order and records, for each secret bit, the next sample whose LSB equals it.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

import numpy as np

from stego.bitstream import BitsLike, BitStream, encode_text
from stego.errors import InsufficientCapacity
from stego.image_model import GlobalIndex, RasterImage, scan_samples
from stego.models import MatchOptions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PositionList:
    """Strictly increasing 1-based global indices, one per secret bit."""

    positions: tuple[GlobalIndex, ...] = ()

    def __post_init__(self):
        positions = tuple(int(p) for p in self.positions)
        previous = 0
        for p in positions:
            if p <= previous:
                raise ValueError(f"positions must be >= 1 and strictly increasing (got {p})")
            previous = p
        object.__setattr__(self, "positions", positions)

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self) -> Iterator[GlobalIndex]:
        return iter(self.positions)

    def __getitem__(self, index: int) -> GlobalIndex:
        return self.positions[index]

    @property
    def last(self) -> int:
        return self.positions[-1] if self.positions else 0


def bound_text(message: str, options: Optional[MatchOptions] = None) -> str:
    """Message with the bound image name (if any) appended."""
    if options is not None and options.bind_image_name:
        return message + options.bind_image_name
    return message


def first_fit_scan(image: RasterImage, bits: BitsLike) -> list[GlobalIndex]:
    """First-fit monotone scan; stops early (returning a shorter list) when the cover runs out."""
    wanted = bits.bits if isinstance(bits, BitStream) else tuple(int(b) for b in bits)
    lsbs = scan_samples(image) & 1
    # 0-based sample offsets holding each LSB value, ascending.
    pools = (np.flatnonzero(lsbs == 0), np.flatnonzero(lsbs == 1))
    sizes = (len(pools[0]), len(pools[1]))

    positions: list[GlobalIndex] = []
    cursor = 0
    for bit in wanted:
        slot = int(np.searchsorted(pools[bit], cursor))
        if slot == sizes[bit]:
            break
        offset = int(pools[bit][slot])
        positions.append(offset + 1)
        cursor = offset + 1
    return positions


def match_bits(image: RasterImage, bits: BitsLike) -> PositionList:
    """First-fit monotone scan of the cover for an arbitrary bit sequence.

    Raises:
        InsufficientCapacity: the cursor passed the last sample with bits remaining
    """
    wanted = bits.bits if isinstance(bits, BitStream) else tuple(int(b) for b in bits)
    positions = first_fit_scan(image, wanted)
    if len(positions) < len(wanted):
        raise InsufficientCapacity(len(positions), len(wanted))

    logger.debug(
        "matched %d bits; last position %d of %d",
        len(positions),
        positions[-1] if positions else 0,
        image.sample_count,
    )
    return PositionList(tuple(positions))


def match_positions(
    image: RasterImage,
    message: str,
    options: Optional[MatchOptions] = None,
) -> PositionList:
    """Positions whose LSBs spell the message (plus any bound image name).

    Args:
        image: Cover image (left untouched)
        message: 7-bit ASCII secret
        options: Matching options; ``bind_image_name`` is appended to the message

    Returns:
        PositionList with one entry per encoded bit

    Raises:
        NonAsciiCharacter, InsufficientCapacity
    """
    return match_bits(image, encode_text(bound_text(message, options)))


def verify_positions(
    image: RasterImage,
    positions: Union[PositionList, Sequence[int]],
    bits: BitsLike,
) -> bool:
    """True iff positions strictly increase, stay in range and their LSBs equal the bits."""
    values = list(positions)
    wanted = list(bits)
    if len(values) != len(wanted):
        return False
    if not values:
        return True

    indices = np.asarray(values, dtype=np.int64)
    if indices[0] < 1 or indices[-1] > image.sample_count:
        return False
    if np.any(np.diff(indices) <= 0):
        return False

    lsbs = (scan_samples(image)[indices - 1] & 1).astype(np.int64)
    return bool(np.array_equal(lsbs, np.asarray(wanted, dtype=np.int64)))
