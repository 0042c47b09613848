"""SPM1 sealed position files."""

from posfile.keystream import key_verifier, keystream, make_salt_source
from posfile.models import OpenedPositionFile, PositionFileHeader, SecretKey
from posfile.schema import (
    HEADER_SIZE,
    read_position_file,
    seal,
    unpack_header,
    unseal,
    write_position_file,
)

__all__ = [
    "SecretKey",
    "PositionFileHeader",
    "OpenedPositionFile",
    "HEADER_SIZE",
    "seal",
    "unseal",
    "unpack_header",
    "read_position_file",
    "write_position_file",
    "key_verifier",
    "keystream",
    "make_salt_source",
]
