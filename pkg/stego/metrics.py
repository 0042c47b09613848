"""Distortion and capacity measures: MSE, PSNR, channel histograms, capacity estimates."""

import math
from typing import Union

import numpy as np

from stego.bitstream import BITS_PER_CHAR, encode_text
from stego.errors import DimensionMismatch
from stego.image_model import MAXVAL, Channel, RasterImage
from stego.matcher import first_fit_scan
from stego.models import CapacityEstimate, ChannelQuality, EmpiricalCapacity, QualityReport

CHANNELS = (Channel.R, Channel.G, Channel.B)


def _check_dims(a: RasterImage, b: RasterImage) -> None:
    if a.size != b.size:
        raise DimensionMismatch(a.size, b.size)


def _mean_squared(a: np.ndarray, b: np.ndarray) -> float:
    diff = a.astype(np.int64) - b.astype(np.int64)
    return float(np.sum(diff * diff)) / diff.size


def mse(a: RasterImage, b: RasterImage) -> float:
    """Sum of squared sample differences over all three planes, divided by 3*M*N."""
    _check_dims(a, b)
    return _mean_squared(a.pixels, b.pixels)


def channel_mse(a: RasterImage, b: RasterImage, channel: Union[Channel, str]) -> float:
    _check_dims(a, b)
    return _mean_squared(a.plane(channel), b.plane(channel))


def psnr_from_mse(value: float) -> float:
    """20*log10(255/sqrt(MSE)); +inf when MSE is zero."""
    if value == 0:
        return math.inf
    return 20 * math.log10(MAXVAL / math.sqrt(value))


def psnr(a: RasterImage, b: RasterImage) -> float:
    return psnr_from_mse(mse(a, b))


def channel_psnr(a: RasterImage, b: RasterImage, channel: Union[Channel, str]) -> float:
    return psnr_from_mse(channel_mse(a, b, channel))


def histogram(image: RasterImage, channel: Union[Channel, str]) -> np.ndarray:
    """256-bin intensity histogram of one plane; bins sum to width*height."""
    return np.bincount(image.plane(channel).ravel(), minlength=MAXVAL + 1)


def histograms_identical(a: RasterImage, b: RasterImage) -> dict[Channel, bool]:
    """Per-channel bin-for-bin histogram equality."""
    return {c: bool(np.array_equal(histogram(a, c), histogram(b, c))) for c in CHANNELS}


def compare_images(a: RasterImage, b: RasterImage) -> QualityReport:
    """Overall and per-channel MSE/PSNR plus histogram verdicts."""
    _check_dims(a, b)
    channels = []
    for channel in CHANNELS:
        value = channel_mse(a, b, channel)
        differing = int(np.count_nonzero(histogram(a, channel) != histogram(b, channel)))
        channels.append(
            ChannelQuality(
                channel=channel.value,
                mse=value,
                psnr=psnr_from_mse(value),
                histogram_identical=differing == 0,
                differing_bins=differing,
            )
        )
    overall = mse(a, b)
    return QualityReport(
        width=a.width,
        height=a.height,
        mse=overall,
        psnr=psnr_from_mse(overall),
        channels=channels,
        histograms_identical=all(c.histogram_identical for c in channels),
    )


def floor_significant(value: int, digits: int = 2) -> int:
    """Floor a non-negative integer to ``digits`` significant figures (3072 -> 3000)."""
    if value <= 0:
        return 0
    scale = 10 ** max(len(str(value)) - digits, 0)
    return (value // scale) * scale


def estimate_capacity(width: int, height: int) -> CapacityEstimate:
    """Capacity under the one-in-four matching assumption.

    Also reports the figures rounded down to two significant figures (3072 -> 3000),
    with characters derived from the rounded bit count (3000 -> 420).
    """
    if width < 1 or height < 1:
        raise ValueError("width and height must be >= 1")
    total = 3 * width * height
    bits = total // 4
    rounded_bits = floor_significant(bits)
    return CapacityEstimate(
        width=width,
        height=height,
        total_samples=total,
        estimated_match_bits=bits,
        estimated_characters=bits // BITS_PER_CHAR,
        rounded_bits=rounded_bits,
        rounded_characters=floor_significant(rounded_bits // BITS_PER_CHAR),
    )


def measure_capacity(image: RasterImage, sample_text: str = "HelloWorld") -> EmpiricalCapacity:
    """Run the first-fit scan on ``sample_text`` repeated until the cover is exhausted."""
    pattern = encode_text(sample_text)
    if not len(pattern):
        raise ValueError("sample_text must not be empty")
    # Each bit consumes at least one sample, so this many repeats always overruns.
    repeats = image.sample_count // len(pattern) + 1
    bits = pattern.bits * repeats
    positions = first_fit_scan(image, bits)
    matched = len(positions)
    last = positions[-1] if positions else 0
    return EmpiricalCapacity(
        sample_text=sample_text,
        matched_bits=matched,
        matched_characters=matched // BITS_PER_CHAR,
        last_position=last,
    )
