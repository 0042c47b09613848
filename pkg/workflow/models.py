"""Pydantic models for workflow results."""

from typing import Optional

from pydantic import BaseModel, Field

from stego.models import CapacityEstimate, EmpiricalCapacity, QualityReport


class HideResult(BaseModel):
    """Outcome of matching a message against a cover and sealing the positions."""

    cover_path: str = Field(description="Cover image path (never modified)")
    posfile_path: str = Field(description="Written SPM1 file")
    width: int = Field(description="Cover width in pixels")
    height: int = Field(description="Cover height in pixels")
    message_length: int = Field(description="Characters in the secret message")
    bound_name: Optional[str] = Field(None, description="Image name appended to the message")
    position_count: int = Field(description="Positions sealed (7 per character)")
    last_position: int = Field(description="Largest matched global index (0 if none)")
    total_samples: int = Field(description="3 * width * height")
    capacity: CapacityEstimate = Field(description="Closed-form capacity for the cover size")
    phase_trace: list[str] = Field(default_factory=list, description="Workflow steps taken")

    @property
    def scan_extent(self) -> float:
        """Fraction of the cover's samples the scan walked through."""
        return self.last_position / self.total_samples

    @property
    def capacity_utilization(self) -> float:
        """Sealed bits as a fraction of the estimated capacity."""
        estimated = self.capacity.estimated_match_bits
        return self.position_count / estimated if estimated else 0.0


class RevealResult(BaseModel):
    """Outcome of a keyed extraction."""

    message: str = Field(description="Recovered message without any bound name")
    bound_name: str = Field(default="", description="Recovered bound image name")
    position_count: int = Field(description="Positions read")
    posfile_width: int = Field(description="Width recorded in the position file")
    posfile_height: int = Field(description="Height recorded in the position file")
    cover_width: int = Field(description="Width of the supplied cover")
    cover_height: int = Field(description="Height of the supplied cover")
    output_path: Optional[str] = Field(None, description="File the message was written to")
    warnings: list[str] = Field(default_factory=list, description="Non-fatal problems")
    phase_trace: list[str] = Field(default_factory=list, description="Workflow steps taken")

    @property
    def dims_match(self) -> bool:
        return (self.posfile_width, self.posfile_height) == (self.cover_width, self.cover_height)


class CapacityReport(BaseModel):
    """Closed-form estimate plus, optionally, a measured figure for a concrete cover."""

    estimate: CapacityEstimate = Field(description="One-in-four estimate")
    empirical: Optional[EmpiricalCapacity] = Field(None, description="Measured first-fit capacity")
    image_path: Optional[str] = Field(None, description="Cover measured, if any")


class BaselineEmbedResult(BaseModel):
    """Outcome of classical LSB embedding."""

    stego_path: str = Field(description="Written stego image")
    bit_count: int = Field(description="Bits embedded")
    quality: QualityReport = Field(description="Cover vs stego distortion")
    phase_trace: list[str] = Field(default_factory=list, description="Workflow steps taken")


class InspectResult(BaseModel):
    """Keyed dump of a position file."""

    width: int = Field(description="Cover width recorded in the file")
    height: int = Field(description="Cover height recorded in the file")
    channel_order: str = Field(default="G,R,B", description="Scan order")
    name_length: int = Field(description="Bound image name length")
    positions: list[int] = Field(description="Decoded global indices")
