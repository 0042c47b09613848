"""Position-matching steganography over 8-bit RGB covers."""

from stego.baseline_lsb import embed_lsb, extract_lsb
from stego.bitstream import BitStream, decode_bits, encode_text
from stego.errors import (
    BitCountNotMultipleOfSeven,
    DimensionMismatch,
    IndexOutOfRange,
    InsufficientCapacity,
    MalformedImage,
    MalformedPositionFile,
    NonAsciiCharacter,
    PositionOutOfRange,
    StegoError,
    UnsupportedBitDepth,
    UnsupportedFormat,
    WrongKey,
)
from stego.extractor import extract_bits, extract_message, split_bound_name
from stego.image_model import (
    Channel,
    ImageFormat,
    Location,
    RasterImage,
    index_to_location,
    load_image,
    load_image_file,
    location_to_index,
    lsb_at,
    save_image,
    serialize_ppm,
)
from stego.matcher import PositionList, match_positions, verify_positions
from stego.metrics import compare_images, estimate_capacity, histogram, mse, psnr
from stego.models import CapacityEstimate, MatchOptions, QualityReport

__all__ = [
    "BitStream",
    "encode_text",
    "decode_bits",
    "RasterImage",
    "Channel",
    "ImageFormat",
    "Location",
    "load_image",
    "load_image_file",
    "save_image",
    "serialize_ppm",
    "index_to_location",
    "location_to_index",
    "lsb_at",
    "PositionList",
    "MatchOptions",
    "match_positions",
    "verify_positions",
    "extract_bits",
    "extract_message",
    "split_bound_name",
    "embed_lsb",
    "extract_lsb",
    "mse",
    "psnr",
    "histogram",
    "compare_images",
    "estimate_capacity",
    "CapacityEstimate",
    "QualityReport",
    "StegoError",
    "NonAsciiCharacter",
    "BitCountNotMultipleOfSeven",
    "IndexOutOfRange",
    "InsufficientCapacity",
    "MalformedImage",
    "UnsupportedFormat",
    "UnsupportedBitDepth",
    "DimensionMismatch",
    "WrongKey",
    "MalformedPositionFile",
    "PositionOutOfRange",
]
