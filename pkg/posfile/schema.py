"""SPM1 position-file layout, sealing and keyed opening.

Layout (all integers big-endian):

    offset  size  field
    0       4     magic "SPM1"
    4       1     version (1)
    5       4     width
    9       4     height
    13      1     channel order (0 = G, R, B)
    14      2     bound image name length
    16      4     position count
    20      16    salt
    36      16    key verifier = SHA-256(salt || key)[:16]
    52      4*n   positions (uint32), XORed with the keystream
"""

import logging
import struct
from pathlib import Path
from typing import Optional, Union

import numpy as np
from pydantic import ValidationError

from posfile.keystream import SaltSource, key_verifier, new_salt, xor_keystream
from posfile.models import (
    CHANNEL_ORDER_GRB,
    FORMAT_VERSION,
    MAGIC,
    OpenedPositionFile,
    PositionFileHeader,
    SecretKey,
)
from stego.bitstream import BITS_PER_CHAR
from stego.errors import (
    BitCountNotMultipleOfSeven,
    MalformedPositionFile,
    PositionOutOfRange,
    WrongKey,
)
from stego.matcher import PositionList

logger = logging.getLogger(__name__)

HEADER = struct.Struct(">4sBIIBHI16s16s")
HEADER_SIZE = HEADER.size
POSITION_SIZE = 4


def pack_header(header: PositionFileHeader) -> bytes:
    return HEADER.pack(
        header.magic,
        header.version,
        header.width,
        header.height,
        header.channel_order,
        header.name_length,
        header.position_count,
        header.salt,
        header.key_verifier,
    )


def unpack_header(data: bytes) -> PositionFileHeader:
    """Parse and structurally check the fixed header (no key involved).

    Raises:
        MalformedPositionFile: truncated header, bad magic, version or channel order
    """
    if len(data) < HEADER_SIZE:
        raise MalformedPositionFile(
            f"{len(data)} bytes is shorter than the {HEADER_SIZE}-byte header"
        )
    fields = HEADER.unpack_from(data)
    magic, version, channel_order = fields[0], fields[1], fields[4]
    if magic != MAGIC:
        raise MalformedPositionFile(f"bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise MalformedPositionFile(f"unsupported version {version}")
    if channel_order != CHANNEL_ORDER_GRB:
        raise MalformedPositionFile(f"unknown channel order {channel_order}")
    return PositionFileHeader(
        magic=magic,
        version=version,
        width=fields[2],
        height=fields[3],
        channel_order=channel_order,
        name_length=fields[5],
        position_count=fields[6],
        salt=fields[7],
        key_verifier=fields[8],
    )


def seal(
    positions: PositionList,
    key: SecretKey,
    image_dims: tuple[int, int],
    name_length: int = 0,
    salt_source: Optional[SaltSource] = None,
) -> bytes:
    """Serialize positions into a sealed SPM1 file.

    Args:
        positions: Matched positions
        key: Shared secret key
        image_dims: Cover (width, height)
        name_length: Characters of the bound image name at the end of the message
        salt_source: Callable returning n random bytes (defaults to os.urandom)

    Returns:
        File bytes

    Raises:
        PositionOutOfRange: a position exceeds 3 * width * height
        BitCountNotMultipleOfSeven: positions do not form whole characters
        ValueError: name_length or dims do not fit the header fields
    """
    width, height = image_dims
    maximum = 3 * width * height
    values = list(positions)
    for p in values:
        if not 1 <= p <= maximum:
            raise PositionOutOfRange(p, maximum)
    if len(values) % BITS_PER_CHAR:
        raise BitCountNotMultipleOfSeven(len(values))
    if name_length * BITS_PER_CHAR > len(values):
        raise ValueError(f"name length {name_length} exceeds the sealed message")

    salt = new_salt(salt_source)
    try:
        header = PositionFileHeader(
            width=width,
            height=height,
            name_length=name_length,
            position_count=len(values),
            salt=salt,
            key_verifier=key_verifier(salt, key.key_bytes),
        )
    except ValidationError as e:
        raise ValueError(f"cannot represent header: {e}") from e

    plain = np.asarray(values, dtype=">u4").tobytes()
    logger.debug("sealing %d positions for %dx%d cover", len(values), width, height)
    return pack_header(header) + xor_keystream(plain, salt, key.key_bytes)


def unseal(data: bytes, key: SecretKey) -> OpenedPositionFile:
    """Open a sealed file with the key.

    The verifier is checked before the payload is touched.

    Raises:
        WrongKey: verifier mismatch
        MalformedPositionFile: bad structure, truncation or invalid decoded positions
    """
    header = unpack_header(data)
    expected = HEADER_SIZE + POSITION_SIZE * header.position_count
    if len(data) < expected:
        raise MalformedPositionFile(f"payload truncated: {len(data)} of {expected} bytes")
    if len(data) > expected:
        raise MalformedPositionFile(f"{len(data) - expected} unexpected trailing bytes")

    if key_verifier(header.salt, key.key_bytes) != header.key_verifier:
        raise WrongKey()

    if header.position_count % BITS_PER_CHAR:
        raise MalformedPositionFile(
            f"position count {header.position_count} is not a multiple of 7"
        )
    if header.name_length * BITS_PER_CHAR > header.position_count:
        raise MalformedPositionFile(f"name length {header.name_length} exceeds the message")

    plain = xor_keystream(data[HEADER_SIZE:expected], header.salt, key.key_bytes)
    values = np.frombuffer(plain, dtype=">u4").astype(np.int64)
    if values.size:
        if values[0] < 1 or np.any(np.diff(values) <= 0):
            raise MalformedPositionFile("positions are not strictly increasing from 1")
        if values[-1] > header.max_position:
            raise MalformedPositionFile(
                f"position {int(values[-1])} exceeds {header.max_position} samples"
            )

    return OpenedPositionFile(
        positions=PositionList(tuple(values.tolist())),
        width=header.width,
        height=header.height,
        name_length=header.name_length,
    )


def write_position_file(path: Union[str, Path], data: bytes) -> None:
    Path(path).write_bytes(data)


def read_position_file(path: Union[str, Path]) -> bytes:
    return Path(path).read_bytes()
