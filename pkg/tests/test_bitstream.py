"""Tests for 7-bit text <-> bit stream conversion."""

import pytest

from stego.bitstream import BitStream, decode_bits, encode_text, ensure_ascii
from stego.errors import BitCountNotMultipleOfSeven, NonAsciiCharacter

# (character, ASCII value, binary value) rows of the HelloWorld listing.
HELLO_WORLD_ROWS = [
    ("H", 72, "1001000"),
    ("e", 101, "1100101"),
    ("l", 108, "1101100"),
    ("l", 108, "1101100"),
    ("o", 111, "1101111"),
    ("W", 87, "1010111"),
    ("o", 111, "1101111"),
    ("r", 114, "1110010"),
    ("l", 108, "1101100"),
    ("d", 100, "1100100"),
]


@pytest.mark.parametrize("char,value,pattern", HELLO_WORLD_ROWS)
def test_character_rows(char, value, pattern):
    """Each character encodes to its 7-bit pattern, MSB first."""
    assert ord(char) == value
    assert str(encode_text(char)) == pattern
    assert decode_bits(BitStream.from_string(pattern)) == char


def test_hello_world_is_seventy_bits():
    """HelloWorld becomes 70 bits whose groups follow the listing."""
    bits = encode_text("HelloWorld")
    assert len(bits) == 70
    assert bits.groups() == [row[2] for row in HELLO_WORLD_ROWS]
    assert str(bits).startswith("1001000" "1100101")


def test_empty_message():
    """Empty text gives an empty stream and back."""
    assert len(encode_text("")) == 0
    assert decode_bits(BitStream()) == ""


def test_non_ascii_rejected():
    """Code points above 127 are reported with their index."""
    with pytest.raises(NonAsciiCharacter) as exc:
        encode_text("é")
    assert exc.value.index == 0
    assert exc.value.exit_code == 3

    with pytest.raises(NonAsciiCharacter) as exc:
        ensure_ascii("abc€")
    assert exc.value.index == 3


def test_decode_requires_multiple_of_seven():
    """A stream of 8 bits cannot be grouped into characters."""
    with pytest.raises(BitCountNotMultipleOfSeven) as exc:
        decode_bits([1, 0, 0, 1, 0, 0, 0, 1])
    assert exc.value.length == 8


def test_round_trip_all_ascii():
    """Every 7-bit code point survives encode/decode."""
    text = "".join(chr(c) for c in range(128))
    assert decode_bits(encode_text(text)) == text


def test_bitstream_rejects_non_binary():
    """Only 0 and 1 are valid bits."""
    with pytest.raises(ValueError):
        BitStream((0, 1, 2))
    with pytest.raises(ValueError):
        BitStream.from_string("10a1")


def test_bitstream_array_conversion():
    """numpy arrays convert both ways."""
    bits = BitStream.from_string("1011 001")
    assert list(bits.as_array()) == [1, 0, 1, 1, 0, 0, 1]
    assert BitStream.from_array(bits.as_array()) == bits
