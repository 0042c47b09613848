"""Classical LSB replacement, kept as the distortion baseline.

Per sample with value v and message bit m:
    LSB(v) == m            -> v
    LSB(v) == 1 and m == 0 -> v - 1
    LSB(v) == 0 and m == 1 -> v + 1
"""

import numpy as np

from stego.bitstream import BitsLike, BitStream
from stego.errors import IndexOutOfRange, InsufficientCapacity
from stego.image_model import RasterImage, from_scan_samples, scan_samples


def embed_lsb(image: RasterImage, bits: BitsLike) -> RasterImage:
    """Write bits into the first samples of the G->R->B scan order.

    Returns a new image; the input is not mutated.

    Raises:
        InsufficientCapacity: more bits than samples
    """
    message = np.asarray(list(bits), dtype=np.int16)
    if message.size > image.sample_count:
        raise InsufficientCapacity(image.sample_count, int(message.size))

    samples = scan_samples(image).astype(np.int16)
    head = samples[: message.size]
    lsb = head & 1
    # Equal LSBs contribute 0; otherwise the sign of (m - lsb) picks -1 or +1.
    samples[: message.size] = head + (message - lsb)
    return from_scan_samples(samples.astype(np.uint8), image.width, image.height)


def extract_lsb(image: RasterImage, bit_count: int) -> BitStream:
    """LSBs of the first ``bit_count`` samples in scan order.

    Raises:
        IndexOutOfRange: bit_count exceeds 3*width*height
    """
    if bit_count < 0:
        raise ValueError("bit_count must be non-negative")
    if bit_count > image.sample_count:
        raise IndexOutOfRange(bit_count, image.sample_count)
    return BitStream.from_array(scan_samples(image)[:bit_count] & 1)
