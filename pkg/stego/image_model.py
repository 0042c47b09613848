"""8-bit RGB raster images and the global G->R->B sample indexing.

Global indices are 1-based. Indices 1..N address the green plane row-major,
N+1..2N the red plane and 2N+1..3N the blue plane, where N = width * height.
"""

from __future__ import annotations

import io
import logging
import struct
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import NamedTuple, Optional, Union

import numpy as np
from PIL import Image, UnidentifiedImageError

from stego.errors import IndexOutOfRange, MalformedImage, UnsupportedBitDepth, UnsupportedFormat

logger = logging.getLogger(__name__)

MAXVAL = 255
_WHITESPACE = frozenset(b" \t\n\r\v\f")
_NEWLINES = frozenset(b"\n\r")
_COMMENT = ord("#")


class Channel(str, Enum):
    R = "R"
    G = "G"
    B = "B"


# Axis of each channel inside RasterImage.pixels (H, W, 3).
CHANNEL_AXIS = {Channel.R: 0, Channel.G: 1, Channel.B: 2}
SCAN_ORDER = (Channel.G, Channel.R, Channel.B)


class ImageFormat(str, Enum):
    PPM = "PPM"
    PNG = "PNG"
    BMP = "BMP"


class Location(NamedTuple):
    channel: Channel
    row: int
    col: int


@dataclass(frozen=True, eq=False)
class RasterImage:
    """Immutable 8-bit RGB raster; ``pixels`` has shape (height, width, 3) in R, G, B order."""

    pixels: np.ndarray

    def __post_init__(self):
        pixels = np.asarray(self.pixels)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ValueError(f"expected (height, width, 3) samples, got shape {pixels.shape}")
        if pixels.dtype != np.uint8:
            if pixels.size and (pixels.min() < 0 or pixels.max() > MAXVAL):
                raise ValueError("samples must lie in [0, 255]")
            pixels = pixels.astype(np.uint8)
        pixels = np.array(pixels, dtype=np.uint8, copy=True)
        pixels.setflags(write=False)
        object.__setattr__(self, "pixels", pixels)

    @classmethod
    def from_planes(cls, red, green, blue) -> RasterImage:
        """Build an image from three (height, width) planes."""
        return cls(np.stack([np.asarray(red), np.asarray(green), np.asarray(blue)], axis=-1))

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def size(self) -> tuple[int, int]:
        return self.width, self.height

    @property
    def sample_count(self) -> int:
        """Total samples over all three planes (3 * width * height)."""
        return 3 * self.width * self.height

    def plane(self, channel: Union[Channel, str]) -> np.ndarray:
        return self.pixels[:, :, CHANNEL_AXIS[Channel(channel)]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RasterImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and np.array_equal(
            self.pixels, other.pixels
        )

    __hash__ = None  # type: ignore[assignment]


GlobalIndex = int


def scan_samples(image: RasterImage) -> np.ndarray:
    """All samples as a flat vector in global-index order (G, R, B; row-major)."""
    return np.concatenate([image.plane(channel).ravel() for channel in SCAN_ORDER])


def from_scan_samples(samples: np.ndarray, width: int, height: int) -> RasterImage:
    """Inverse of :func:`scan_samples`."""
    samples = np.asarray(samples, dtype=np.uint8)
    if samples.size != 3 * width * height:
        raise ValueError(f"expected {3 * width * height} samples, got {samples.size}")
    planes = dict(zip(SCAN_ORDER, samples.reshape(3, height, width)))
    return RasterImage.from_planes(planes[Channel.R], planes[Channel.G], planes[Channel.B])


def index_to_location(index: GlobalIndex, image: RasterImage) -> Location:
    """Resolve a 1-based global index to (channel, row, col).

    Raises:
        IndexOutOfRange: index outside 1..3*width*height
    """
    maximum = image.sample_count
    if not 1 <= index <= maximum:
        raise IndexOutOfRange(index, maximum)
    plane_size = image.width * image.height
    plane_number, offset = divmod(index - 1, plane_size)
    row, col = divmod(offset, image.width)
    return Location(SCAN_ORDER[plane_number], row, col)


def location_to_index(location: Location, image: RasterImage) -> GlobalIndex:
    """Inverse of :func:`index_to_location`."""
    channel, row, col = location
    if not (0 <= row < image.height and 0 <= col < image.width):
        raise ValueError(f"location ({row}, {col}) outside {image.width}x{image.height} image")
    plane_number = SCAN_ORDER.index(Channel(channel))
    return plane_number * image.width * image.height + row * image.width + col + 1


def lsb_at(image: RasterImage, index: GlobalIndex) -> int:
    """Least-significant bit of the sample at a global index."""
    channel, row, col = index_to_location(index, image)
    return int(image.plane(channel)[row, col]) & 1


def random_image(width: int, height: int, rng: Optional[np.random.Generator] = None) -> RasterImage:
    """Uniformly random cover of the given size."""
    if width < 1 or height < 1:
        raise ValueError("width and height must be >= 1")
    rng = rng if rng is not None else np.random.default_rng()
    return RasterImage(rng.integers(0, MAXVAL + 1, size=(height, width, 3), dtype=np.uint8))


# --- decoding -------------------------------------------------------------------------


class _PnmHeaderReader:
    """Cursor over a netpbm header: whitespace-separated ASCII integers and '#' comments."""

    def __init__(self, data: bytes, start: int):
        self.data = data
        self.pos = start

    def _peek(self) -> Optional[int]:
        return self.data[self.pos] if self.pos < len(self.data) else None

    def _skip_separators(self) -> None:
        while (byte := self._peek()) is not None:
            if byte in _WHITESPACE:
                self.pos += 1
            elif byte == _COMMENT:
                while (byte := self._peek()) is not None and byte not in _NEWLINES:
                    self.pos += 1
            else:
                break

    def read_int(self, name: str) -> int:
        byte = self._peek()
        if byte is None:
            raise MalformedImage(f"header truncated before {name}")
        if byte not in _WHITESPACE and byte != _COMMENT:
            raise MalformedImage(f"expected whitespace before {name}")
        self._skip_separators()
        start = self.pos
        while (byte := self._peek()) is not None and 0x30 <= byte <= 0x39:
            self.pos += 1
        if start == self.pos:
            raise MalformedImage(f"missing or non-numeric {name}")
        return int(self.data[start : self.pos])

    def read_single_whitespace(self) -> None:
        byte = self._peek()
        if byte is None or byte not in _WHITESPACE:
            raise MalformedImage("header must end with a single whitespace byte")
        self.pos += 1


def _decode_pnm(source: bytes) -> RasterImage:
    magic = source[:2]
    if magic not in (b"P6", b"P5"):
        if magic[:1] == b"P" and magic[1:2].isdigit():
            raise UnsupportedFormat(f"netpbm variant {magic.decode('ascii')}; only P6 and P5")
        raise MalformedImage("missing P6 magic")

    header = _PnmHeaderReader(source, 2)
    width = header.read_int("width")
    height = header.read_int("height")
    maxval = header.read_int("maxval")
    header.read_single_whitespace()

    if width < 1 or height < 1:
        raise MalformedImage(f"non-positive dimensions {width}x{height}")
    if not 0 < maxval < 65536:
        raise MalformedImage(f"invalid maxval {maxval}")
    if maxval != MAXVAL:
        raise UnsupportedBitDepth(f"maxval {maxval} (only 255 is supported)")

    channels = 3 if magic == b"P6" else 1
    expected = width * height * channels
    payload = source[header.pos : header.pos + expected]
    if len(payload) < expected:
        raise MalformedImage(f"payload has {len(payload)} bytes, expected {expected}")
    if len(source) > header.pos + expected:
        trailing = len(source) - header.pos - expected
        logger.debug("ignoring %d trailing bytes after PNM payload", trailing)

    samples = np.frombuffer(payload, dtype=np.uint8)
    if channels == 1:
        plane = samples.reshape(height, width)
        return RasterImage.from_planes(plane, plane, plane)
    return RasterImage(samples.reshape(height, width, 3))


_PNG_IHDR = struct.Struct(">4sIIB")
_BMP_SAMPLE_BITS = {8, 24, 32}


def _check_declared_depth(source: bytes, image_format: ImageFormat) -> None:
    """Reject files whose stored samples are not 8 bits wide.

    Pillow widens 1/2/4-bit PNG gray to L and narrows 16-bit PNG and 15/16-bit BMP
    colour to RGB, so the mode alone hides the depth; the header has it.
    """
    if image_format is ImageFormat.PNG and len(source) >= 8 + 4 + _PNG_IHDR.size:
        chunk, _, _, depth = _PNG_IHDR.unpack_from(source, 12)
        if chunk == b"IHDR" and depth != 8:
            raise UnsupportedBitDepth(f"PNG bit depth {depth}")
    elif image_format is ImageFormat.BMP and len(source) >= 30:
        (header_size,) = struct.unpack_from("<I", source, 14)
        (bits,) = struct.unpack_from("<H", source, 24 if header_size == 12 else 28)
        if bits not in _BMP_SAMPLE_BITS:
            raise UnsupportedBitDepth(f"BMP with {bits} bits per pixel")


def _decode_with_pillow(source: bytes, image_format: ImageFormat) -> RasterImage:
    try:
        with Image.open(io.BytesIO(source)) as img:
            if img.format != image_format.value:
                raise MalformedImage(f"data is {img.format}, not {image_format.value}")
            img.load()
            mode = img.mode
            if mode in ("RGBA", "LA", "PA", "RGBa", "La"):
                raise UnsupportedFormat(f"alpha channel ({mode})")
            if mode == "P":
                raise UnsupportedFormat("palette images")
            _check_declared_depth(source, image_format)
            if mode in ("1", "I", "I;16", "I;16B", "I;16L", "F"):
                raise UnsupportedBitDepth(f"pixel mode {mode}")
            if mode == "L":
                plane = np.asarray(img, dtype=np.uint8)
                return RasterImage.from_planes(plane, plane, plane)
            if mode != "RGB":
                raise UnsupportedFormat(f"pixel mode {mode}")
            return RasterImage(np.asarray(img, dtype=np.uint8))
    except (UnidentifiedImageError, OSError, SyntaxError) as e:
        raise MalformedImage(str(e)) from e


def _as_format(value: Union[ImageFormat, str]) -> ImageFormat:
    if isinstance(value, ImageFormat):
        return value
    return ImageFormat(value.upper())


def load_image(source: bytes, format_hint: Union[ImageFormat, str]) -> RasterImage:
    """Decode image bytes of the hinted format.

    Args:
        source: Raw file bytes
        format_hint: PPM (binary P6, or P5 graymap), PNG or BMP

    Returns:
        RasterImage; grayscale inputs are replicated into all three planes

    Raises:
        MalformedImage, UnsupportedFormat, UnsupportedBitDepth
    """
    try:
        image_format = _as_format(format_hint)
    except ValueError:
        raise UnsupportedFormat(str(getattr(format_hint, "value", format_hint))) from None

    if image_format is ImageFormat.PPM:
        return _decode_pnm(bytes(source))
    return _decode_with_pillow(bytes(source), image_format)


_SUFFIXES = {
    ".ppm": ImageFormat.PPM,
    ".pnm": ImageFormat.PPM,
    ".pgm": ImageFormat.PPM,
    ".png": ImageFormat.PNG,
    ".bmp": ImageFormat.BMP,
}


def detect_format(source: bytes, path: Optional[Union[str, Path]] = None) -> ImageFormat:
    """Guess the format from magic bytes, falling back to the file suffix."""
    if source[:2] in (b"P5", b"P6"):
        return ImageFormat.PPM
    if source[:8] == b"\x89PNG\r\n\x1a\n":
        return ImageFormat.PNG
    if source[:2] == b"BM":
        return ImageFormat.BMP
    if path is not None:
        suffix = Path(path).suffix.lower()
        if suffix in _SUFFIXES:
            return _SUFFIXES[suffix]
    raise UnsupportedFormat("cannot determine image format")


def load_image_file(path: Union[str, Path]) -> RasterImage:
    """Read and decode an image file, detecting its format."""
    source = Path(path).read_bytes()
    image_format = detect_format(source, path)
    logger.debug("loading %s as %s", path, image_format.value)
    return load_image(source, image_format)


# --- encoding -------------------------------------------------------------------------


def serialize_ppm(image: RasterImage) -> bytes:
    """Binary P6 with the canonical ``P6\\n<w> <h>\\n255\\n`` header."""
    header = f"P6\n{image.width} {image.height}\n{MAXVAL}\n".encode("ascii")
    return header + image.pixels.tobytes()


def encode_image(image: RasterImage, image_format: Union[ImageFormat, str]) -> bytes:
    image_format = _as_format(image_format)
    if image_format is ImageFormat.PPM:
        return serialize_ppm(image)
    buffer = io.BytesIO()
    Image.fromarray(np.ascontiguousarray(image.pixels)).save(
        buffer, format=image_format.value
    )
    return buffer.getvalue()


def format_for_path(path: Union[str, Path]) -> ImageFormat:
    suffix = Path(path).suffix.lower()
    if suffix not in _SUFFIXES:
        raise UnsupportedFormat(f"unknown image suffix {suffix!r}")
    return _SUFFIXES[suffix]


def save_image(image: RasterImage, path: Union[str, Path]) -> None:
    """Write an image, choosing the format from the file suffix."""
    Path(path).write_bytes(encode_image(image, format_for_path(path)))
