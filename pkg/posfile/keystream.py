"""SHA-256 key verifier, payload keystream and salt sources.

This is a key gate plus obfuscation, not authenticated encryption.
"""

import hashlib
import os
import random
from typing import Callable, Optional

import numpy as np

from posfile.models import SALT_SIZE, VERIFIER_SIZE

SaltSource = Callable[[int], bytes]

_BLOCK = hashlib.sha256().digest_size


def key_verifier(salt: bytes, key_bytes: bytes) -> bytes:
    """First 16 bytes of SHA-256(salt || key)."""
    return hashlib.sha256(salt + key_bytes).digest()[:VERIFIER_SIZE]


def keystream(salt: bytes, key_bytes: bytes, length: int) -> bytes:
    """Concatenated SHA-256(salt || key || counter) blocks, counter 32-bit big-endian from 0."""
    blocks = []
    for counter in range(-(-length // _BLOCK)):
        blocks.append(hashlib.sha256(salt + key_bytes + counter.to_bytes(4, "big")).digest())
    return b"".join(blocks)[:length]


def xor_keystream(data: bytes, salt: bytes, key_bytes: bytes) -> bytes:
    """XOR data with the keystream; applying it twice restores the input."""
    if not data:
        return b""
    stream = np.frombuffer(keystream(salt, key_bytes, len(data)), dtype=np.uint8)
    return (np.frombuffer(data, dtype=np.uint8) ^ stream).tobytes()


def make_salt_source(seed: Optional[int] = None) -> SaltSource:
    """``os.urandom`` by default; a seeded deterministic source for reproducible files."""
    if seed is None:
        return os.urandom
    rng = random.Random(seed)
    return rng.randbytes


def new_salt(source: Optional[SaltSource] = None) -> bytes:
    salt = (source or os.urandom)(SALT_SIZE)
    if len(salt) != SALT_SIZE:
        raise ValueError(f"salt source returned {len(salt)} bytes, expected {SALT_SIZE}")
    return bytes(salt)
