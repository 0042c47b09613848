"""Models for the SPM1 position-file container."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from pydantic import BaseModel, Field

from stego.matcher import PositionList

MAGIC = b"SPM1"
FORMAT_VERSION = 1
CHANNEL_ORDER_GRB = 0
SALT_SIZE = 16
VERIFIER_SIZE = 16


@dataclass(frozen=True)
class SecretKey:
    """Key shared by sender and receiver; any non-empty byte string."""

    key_bytes: bytes

    def __post_init__(self):
        if not isinstance(self.key_bytes, (bytes, bytearray)):
            raise TypeError("key_bytes must be bytes")
        if len(self.key_bytes) < 1:
            raise ValueError("secret key must not be empty")
        object.__setattr__(self, "key_bytes", bytes(self.key_bytes))

    @classmethod
    def from_passphrase(cls, passphrase: str) -> SecretKey:
        return cls(passphrase.encode("utf-8"))

    def __repr__(self) -> str:
        return f"SecretKey(<{len(self.key_bytes)} bytes>)"


class PositionFileHeader(BaseModel):
    """Fixed 52-byte SPM1 header."""

    magic: bytes = Field(default=MAGIC, description="Always b'SPM1'")
    version: int = Field(default=FORMAT_VERSION, ge=0, le=0xFF, description="Format version")
    width: int = Field(ge=0, le=0xFFFFFFFF, description="Cover width in pixels")
    height: int = Field(ge=0, le=0xFFFFFFFF, description="Cover height in pixels")
    channel_order: int = Field(
        default=CHANNEL_ORDER_GRB, ge=0, le=0xFF, description="0 = G, R, B scan order"
    )
    name_length: int = Field(
        default=0, ge=0, le=0xFFFF, description="Characters of bound image name (0 if unbound)"
    )
    position_count: int = Field(ge=0, le=0xFFFFFFFF, description="Number of stored positions")
    salt: bytes = Field(min_length=SALT_SIZE, max_length=SALT_SIZE, description="Random salt")
    key_verifier: bytes = Field(
        min_length=VERIFIER_SIZE,
        max_length=VERIFIER_SIZE,
        description="First 16 bytes of SHA-256(salt || key)",
    )

    @property
    def max_position(self) -> int:
        return 3 * self.width * self.height


class OpenedPositionFile(NamedTuple):
    """Result of a successful keyed open."""

    positions: PositionList
    width: int
    height: int
    name_length: int
