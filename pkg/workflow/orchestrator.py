"""Workflow orchestrator for the sender and receiver sides."""

import logging
from pathlib import Path
from typing import Optional, Union

import numpy as np

from config import StegoSettings, get_settings
from posfile.keystream import make_salt_source
from posfile.models import SecretKey
from posfile.schema import read_position_file, seal, unseal, write_position_file
from stego.baseline_lsb import embed_lsb, extract_lsb
from stego.bitstream import BITS_PER_CHAR, decode_bits, encode_text, ensure_ascii
from stego.extractor import extract_message, split_bound_name
from stego.image_model import (
    RasterImage,
    format_for_path,
    load_image_file,
    random_image,
    save_image,
)
from stego.matcher import match_positions
from stego.metrics import compare_images, estimate_capacity, measure_capacity
from stego.models import MatchOptions, QualityReport
from workflow.debug import print_hide_result, print_phase_trace, print_reveal_result
from workflow.models import (
    BaselineEmbedResult,
    CapacityReport,
    HideResult,
    InspectResult,
    RevealResult,
)

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class StegoWorkflow:
    """Runs hide / reveal / analysis flows over files on disk."""

    def __init__(self, settings: Optional[StegoSettings] = None):
        """Initialize the workflow.

        Args:
            settings: Runtime settings, defaults to loading from environment
        """
        self.settings = settings or get_settings()

    def _seed(self, seed: Optional[int]) -> Optional[int]:
        return seed if seed is not None else self.settings.stego_seed

    def hide(
        self,
        cover_path: PathLike,
        message: str,
        key: SecretKey,
        out_path: PathLike,
        bind_name: Optional[str] = None,
        seed: Optional[int] = None,
    ) -> HideResult:
        """Match the message against the cover and write a sealed position file.

        The cover is only read. Nothing is written except the position file.

        Args:
            cover_path: Cover image
            message: ASCII secret
            key: Shared secret key
            out_path: Destination SPM1 file
            bind_name: Image name appended to the message (optional)
            seed: Salt seed for reproducible output (optional)

        Returns:
            HideResult
        """
        phase_trace: list[str] = []

        phase_trace.append("Phase 1: validate message")
        ensure_ascii(message)
        if bind_name:
            ensure_ascii(bind_name)

        phase_trace.append(f"Phase 2: load cover {cover_path}")
        cover = load_image_file(cover_path)

        phase_trace.append("Phase 3: first-fit position matching")
        options = MatchOptions(bind_image_name=bind_name or None)
        positions = match_positions(cover, message, options)

        phase_trace.append("Phase 4: seal position file")
        data = seal(
            positions,
            key,
            cover.size,
            name_length=len(bind_name or ""),
            salt_source=make_salt_source(self._seed(seed)),
        )
        write_position_file(out_path, data)
        logger.info("sealed %d positions into %s", len(positions), out_path)

        result = HideResult(
            cover_path=str(cover_path),
            posfile_path=str(out_path),
            width=cover.width,
            height=cover.height,
            message_length=len(message),
            bound_name=bind_name or None,
            position_count=len(positions),
            last_position=positions.last,
            total_samples=cover.sample_count,
            capacity=estimate_capacity(cover.width, cover.height),
            phase_trace=phase_trace,
        )
        print_hide_result(result, self.settings)
        print_phase_trace(phase_trace, self.settings)
        return result

    def reveal(
        self,
        cover_path: PathLike,
        posfile_path: PathLike,
        key: SecretKey,
        output_path: Optional[PathLike] = None,
    ) -> RevealResult:
        """Open the position file with the key and read the message from the cover.

        Args:
            cover_path: Cover image the positions were matched against
            posfile_path: Sealed SPM1 file
            key: Shared secret key
            output_path: Also write the recovered message here (optional)

        Returns:
            RevealResult; dimension disagreements are reported in ``warnings``
        """
        phase_trace: list[str] = []
        warnings: list[str] = []

        phase_trace.append("Phase 1: open position file")
        opened = unseal(read_position_file(posfile_path), key)

        phase_trace.append(f"Phase 2: load cover {cover_path}")
        cover = load_image_file(cover_path)
        if (opened.width, opened.height) != cover.size:
            warning = (
                f"position file was made for a {opened.width}x{opened.height} cover, "
                f"got {cover.width}x{cover.height}"
            )
            logger.warning(warning)
            warnings.append(warning)

        phase_trace.append("Phase 3: read LSBs at positions")
        text = extract_message(cover, opened.positions)
        message, bound_name = split_bound_name(text, opened.name_length)

        if output_path is not None:
            phase_trace.append(f"Phase 4: store message in {output_path}")
            Path(output_path).write_text(message, encoding="ascii")

        result = RevealResult(
            message=message,
            bound_name=bound_name,
            position_count=len(opened.positions),
            posfile_width=opened.width,
            posfile_height=opened.height,
            cover_width=cover.width,
            cover_height=cover.height,
            output_path=str(output_path) if output_path is not None else None,
            warnings=warnings,
            phase_trace=phase_trace,
        )
        print_reveal_result(result, self.settings)
        print_phase_trace(phase_trace, self.settings)
        return result

    def analyze(self, image_a_path: PathLike, image_b_path: PathLike) -> QualityReport:
        """MSE, PSNR and histogram comparison of two image files."""
        return compare_images(load_image_file(image_a_path), load_image_file(image_b_path))

    def capacity(
        self,
        width: int,
        height: int,
        image_path: Optional[PathLike] = None,
        sample_text: str = "HelloWorld",
    ) -> CapacityReport:
        """Closed-form capacity, plus the measured first-fit capacity of a cover if given."""
        empirical = None
        if image_path is not None:
            empirical = measure_capacity(load_image_file(image_path), sample_text)
        return CapacityReport(
            estimate=estimate_capacity(width, height),
            empirical=empirical,
            image_path=str(image_path) if image_path is not None else None,
        )

    def baseline_embed(
        self,
        cover_path: PathLike,
        message: str,
        out_path: PathLike,
    ) -> BaselineEmbedResult:
        """Classical LSB embedding of the message; writes a stego image."""
        phase_trace: list[str] = []

        phase_trace.append(f"Phase 1: load cover {cover_path}")
        cover = load_image_file(cover_path)
        format_for_path(out_path)

        phase_trace.append("Phase 2: LSB replacement")
        bits = encode_text(message)
        stego = embed_lsb(cover, bits)

        phase_trace.append(f"Phase 3: write stego image {out_path}")
        save_image(stego, out_path)

        print_phase_trace(phase_trace, self.settings)
        return BaselineEmbedResult(
            stego_path=str(out_path),
            bit_count=len(bits),
            quality=compare_images(cover, stego),
            phase_trace=phase_trace,
        )

    def baseline_reveal(self, stego_path: PathLike, characters: int) -> str:
        """Read ``characters`` 7-bit characters from the start of the scan order."""
        stego = load_image_file(stego_path)
        return decode_bits(extract_lsb(stego, characters * BITS_PER_CHAR))

    def inspect(self, posfile_path: PathLike, key: SecretKey) -> InspectResult:
        """Keyed dump of a position file's header and positions."""
        opened = unseal(read_position_file(posfile_path), key)
        return InspectResult(
            width=opened.width,
            height=opened.height,
            name_length=opened.name_length,
            positions=list(opened.positions),
        )

    def make_cover(
        self,
        width: int,
        height: int,
        out_path: PathLike,
        seed: Optional[int] = None,
    ) -> RasterImage:
        """Write a uniformly random cover image."""
        format_for_path(out_path)
        cover = random_image(width, height, np.random.default_rng(seed))
        save_image(cover, out_path)
        return cover
