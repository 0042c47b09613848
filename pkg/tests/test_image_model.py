"""Tests for raster decoding and global sample indexing."""

import io
import random
import struct
import zlib

import numpy as np
import pytest
from PIL import Image

from stego.errors import IndexOutOfRange, MalformedImage, UnsupportedBitDepth, UnsupportedFormat
from stego.image_model import (
    Channel,
    ImageFormat,
    Location,
    RasterImage,
    detect_format,
    encode_image,
    from_scan_samples,
    index_to_location,
    load_image,
    load_image_file,
    location_to_index,
    lsb_at,
    random_image,
    save_image,
    scan_samples,
    serialize_ppm,
)


def _pillow_bytes(img: Image.Image, fmt: str) -> bytes:
    buffer = io.BytesIO()
    img.save(buffer, format=fmt)
    return buffer.getvalue()


def test_smallest_ppm():
    """A 1x1 P6 decodes into one sample per plane."""
    image = load_image(b"P6\n1 1\n255\n" + bytes([255, 0, 10]), "PPM")
    assert image.size == (1, 1)
    assert image.plane(Channel.R)[0, 0] == 255
    assert image.plane(Channel.G)[0, 0] == 0
    assert image.plane(Channel.B)[0, 0] == 10


def test_truncated_payload():
    """A 2x2 header with 9 payload bytes is malformed."""
    with pytest.raises(MalformedImage):
        load_image(b"P6\n2 2\n255\n" + bytes(9), ImageFormat.PPM)


def test_generated_64x64_plane_sums():
    """Plane sums agree with arithmetic done directly on the raw bytes."""
    rnd = random.Random(7)
    payload = bytes(rnd.randrange(256) for _ in range(64 * 64 * 3))
    expected = [sum(payload[offset::3]) for offset in range(3)]

    image = load_image(b"P6\n64 64\n255\n" + payload, "PPM")
    assert image.plane("R").size == 4096
    assert int(image.plane("R").sum()) == expected[0]
    assert int(image.plane("G").sum()) == expected[1]
    assert int(image.plane("B").sum()) == expected[2]


def test_header_comments_and_whitespace():
    """Comments and mixed whitespace in the header are skipped."""
    data = b"P6 # made by hand\n 2\t1\r\n# depth\n255\n" + bytes(range(6))
    image = load_image(data, "PPM")
    assert image.size == (2, 1)
    assert list(image.pixels.ravel()) == list(range(6))


def test_header_errors():
    """Bad magic, bad dimensions and other depths are rejected."""
    with pytest.raises(MalformedImage):
        load_image(b"XX\n1 1\n255\n" + bytes(3), "PPM")
    with pytest.raises(UnsupportedFormat):
        load_image(b"P3\n1 1\n255\n0 0 0\n", "PPM")
    with pytest.raises(MalformedImage):
        load_image(b"P6\n0 1\n255\n", "PPM")
    with pytest.raises(MalformedImage):
        load_image(b"P6\n1 1\n", "PPM")
    with pytest.raises(UnsupportedBitDepth):
        load_image(b"P6\n1 1\n65535\n" + bytes(6), "PPM")


def test_graymap_replicated():
    """P5 samples are copied into all three planes."""
    image = load_image(b"P5\n2 1\n255\n" + bytes([3, 200]), "PPM")
    for channel in Channel:
        assert list(image.plane(channel).ravel()) == [3, 200]


def test_canonical_ppm_round_trip():
    """A canonical P6 file re-serializes byte for byte."""
    data = b"P6\n3 2\n255\n" + bytes(range(18))
    assert serialize_ppm(load_image(data, "PPM")) == data


def test_png_and_bmp_via_pillow():
    """RGB PNG and BMP decode to the same samples."""
    image = random_image(5, 4, np.random.default_rng(1))
    for fmt in ("PNG", "BMP"):
        decoded = load_image(encode_image(image, fmt), fmt)
        assert decoded == image


def test_pillow_rejections():
    """Alpha, palette and 16-bit inputs are refused."""
    rgba = _pillow_bytes(Image.new("RGBA", (2, 2)), "PNG")
    with pytest.raises(UnsupportedFormat):
        load_image(rgba, "PNG")

    palette = _pillow_bytes(Image.new("P", (2, 2)), "PNG")
    with pytest.raises(UnsupportedFormat):
        load_image(palette, "PNG")

    deep = _pillow_bytes(Image.new("I;16", (2, 2)), "PNG")
    with pytest.raises(UnsupportedBitDepth):
        load_image(deep, "PNG")

    with pytest.raises(MalformedImage):
        load_image(b"\x89PNG\r\n\x1a\nnot really", "PNG")

    with pytest.raises(MalformedImage):
        load_image(_pillow_bytes(Image.new("RGB", (2, 2)), "BMP"), "PNG")


def test_grayscale_png_replicated():
    """L-mode PNGs fill every plane."""
    gray = Image.fromarray(np.array([[1, 2], [3, 4]], dtype=np.uint8))
    image = load_image(_pillow_bytes(gray, "PNG"), "PNG")
    assert np.array_equal(image.plane("R"), image.plane("B"))
    assert image.plane("G")[1, 1] == 4


def test_detect_format():
    """Magic bytes win, then the suffix."""
    assert detect_format(b"P6\n") is ImageFormat.PPM
    assert detect_format(b"\x89PNG\r\n\x1a\n") is ImageFormat.PNG
    assert detect_format(b"BM") is ImageFormat.BMP
    assert detect_format(b"????", "cover.bmp") is ImageFormat.BMP
    with pytest.raises(UnsupportedFormat):
        detect_format(b"????", "cover.gif")


def test_save_and_load_file(tmp_path):
    """save_image picks the encoder from the suffix."""
    image = random_image(6, 3, np.random.default_rng(2))
    for name in ("a.ppm", "a.png", "a.bmp"):
        save_image(image, tmp_path / name)
        assert load_image_file(tmp_path / name) == image
    with pytest.raises(UnsupportedFormat):
        save_image(image, tmp_path / "a.jpg")


def test_index_boundaries():
    """Index 1 is the first green sample, N+1 the first red one."""
    image = random_image(4, 3, np.random.default_rng(0))
    n = 12
    assert index_to_location(1, image) == Location(Channel.G, 0, 0)
    assert index_to_location(n + 1, image) == Location(Channel.R, 0, 0)
    assert index_to_location(2 * n + 1, image) == Location(Channel.B, 0, 0)
    assert index_to_location(3 * n, image) == Location(Channel.B, 2, 3)
    for bad in (0, 3 * n + 1):
        with pytest.raises(IndexOutOfRange):
            index_to_location(bad, image)


def test_mapping_is_bijective():
    """All 18 indices of a 2-row, 3-column image map to distinct locations and back."""
    image = RasterImage(np.zeros((2, 3, 3), dtype=np.uint8))
    assert index_to_location(5, image) == Location(Channel.G, 1, 1)

    seen = set()
    for index in range(1, 19):
        location = index_to_location(index, image)
        seen.add(location)
        assert location_to_index(location, image) == index
    assert len(seen) == 18


def test_lsb_at():
    """Even samples give 0, odd give 1."""
    green = np.array([[154, 77]], dtype=np.uint8)
    image = RasterImage.from_planes(np.zeros_like(green), green, np.zeros_like(green))
    assert lsb_at(image, 1) == 0
    assert lsb_at(image, 2) == 1

    white = RasterImage(np.full((2, 2, 3), 255, dtype=np.uint8))
    assert all(lsb_at(white, i) == 1 for i in range(1, white.sample_count + 1))


def test_scan_samples_round_trip():
    """scan_samples follows G, R, B order and inverts cleanly."""
    image = random_image(3, 2, np.random.default_rng(5))
    samples = scan_samples(image)
    assert samples[0] == image.plane("G")[0, 0]
    assert samples[6] == image.plane("R")[0, 0]
    assert samples[12] == image.plane("B")[0, 0]
    assert from_scan_samples(samples, 3, 2) == image


def test_raster_is_read_only():
    """Pixels cannot be written through the image."""
    image = random_image(2, 2, np.random.default_rng(3))
    with pytest.raises(ValueError):
        image.pixels[0, 0, 0] = 1


def _png_chunk(kind: bytes, data: bytes) -> bytes:
    return struct.pack(">I", len(data)) + kind + data + struct.pack(">I", zlib.crc32(kind + data))


def _raw_png(width: int, height: int, depth: int, color_type: int, rows: list[bytes]) -> bytes:
    ihdr = struct.pack(">IIBBBBB", width, height, depth, color_type, 0, 0, 0)
    scanlines = b"".join(b"\x00" + row for row in rows)
    return (
        b"\x89PNG\r\n\x1a\n"
        + _png_chunk(b"IHDR", ihdr)
        + _png_chunk(b"IDAT", zlib.compress(scanlines))
        + _png_chunk(b"IEND", b"")
    )


def test_sixteen_bit_rgb_png_rejected():
    """16-bit RGB decodes to RGB in Pillow but is not an 8-bit cover."""
    data = _raw_png(1, 1, 16, 2, [bytes([1, 1, 2, 3, 4, 5])])
    with pytest.raises(UnsupportedBitDepth):
        load_image(data, "PNG")


@pytest.mark.parametrize("depth,row", [(1, b"\xa0"), (2, b"\x1b"), (4, b"\x3c")])
def test_low_depth_gray_png_rejected(depth, row):
    """1, 2 and 4-bit grayscale PNGs are widened by Pillow but still rejected."""
    with pytest.raises(UnsupportedBitDepth):
        load_image(_raw_png(8 // depth, 1, depth, 0, [row]), "PNG")


def test_eight_bit_raw_png_accepted():
    """The hand-built encoder yields a loadable cover at depth 8."""
    image = load_image(_raw_png(1, 1, 8, 2, [bytes([9, 8, 7])]), "PNG")
    assert list(image.pixels.ravel()) == [9, 8, 7]


def test_sixteen_bit_bmp_rejected():
    """15/16-bit BMP colour is not 8 bits per sample."""
    pixels = b"\x1f\x00\x00\x00"
    info = struct.pack("<IiiHHIIiiII", 40, 1, 1, 1, 16, 0, len(pixels), 2835, 2835, 0, 0)
    header = b"BM" + struct.pack("<IHHI", 14 + len(info) + len(pixels), 0, 0, 14 + len(info))
    with pytest.raises(UnsupportedBitDepth):
        load_image(header + info + pixels, "BMP")
