"""Pydantic models for matcher options, capacity figures and image-quality reports."""

from typing import Optional

from pydantic import BaseModel, Field


class MatchOptions(BaseModel):
    """Options for position matching."""

    bind_image_name: Optional[str] = Field(
        None,
        description="Image name appended to the message before encoding (e.g. 'Lena')",
    )


class CapacityEstimate(BaseModel):
    """Closed-form capacity figures for an image size (one quarter of samples match)."""

    width: int = Field(ge=1, description="Image width in pixels")
    height: int = Field(ge=1, description="Image height in pixels")
    total_samples: int = Field(ge=3, description="3 * width * height")
    estimated_match_bits: int = Field(ge=0, description="floor(total_samples / 4)")
    estimated_characters: int = Field(ge=0, description="floor(estimated_match_bits / 7)")
    rounded_bits: int = Field(
        ge=0, description="estimated_match_bits floored to two significant figures"
    )
    rounded_characters: int = Field(
        ge=0, description="(rounded_bits / 7) floored to two significant figures"
    )


class EmpiricalCapacity(BaseModel):
    """Bits actually placed by the first-fit scan before the cover ran out."""

    sample_text: str = Field(description="Text repeated cyclically as the test message")
    matched_bits: int = Field(ge=0, description="Bits matched before capacity was exhausted")
    matched_characters: int = Field(ge=0, description="Whole 7-bit characters matched")
    last_position: int = Field(ge=0, description="Global index of the final matched sample")


class ChannelQuality(BaseModel):
    """Distortion figures for a single colour plane."""

    channel: str = Field(description="R, G or B")
    mse: float = Field(ge=0.0, description="Mean squared error over the plane")
    psnr: float = Field(description="PSNR in dB (inf when the planes are identical)")
    histogram_identical: bool = Field(description="Whether all 256 bins are equal")
    differing_bins: int = Field(ge=0, description="Number of histogram bins that differ")


class QualityReport(BaseModel):
    """Distortion report between a cover and a candidate stego image."""

    width: int = Field(description="Image width in pixels")
    height: int = Field(description="Image height in pixels")
    mse: float = Field(ge=0.0, description="MSE over all 3 * M * N samples")
    psnr: float = Field(description="PSNR in dB (inf when the images are identical)")
    channels: list[ChannelQuality] = Field(description="Per-channel figures, R, G, B")
    histograms_identical: bool = Field(description="Whether every channel histogram matches")
