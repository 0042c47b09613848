"""Plain-text and key=value rendering of analysis, capacity and inspection reports."""

import math
from typing import Literal

from stego.models import QualityReport
from workflow.models import CapacityReport, HideResult, InspectResult

ReportFormat = Literal["text", "kv"]

POSITIONS_PER_ROW = 13


def format_number(value: float) -> str:
    """Fixed-point number, with ``inf`` spelled out for identical images."""
    if math.isinf(value):
        return "inf"
    return f"{value:.6f}"


def _kv(pairs: list[tuple[str, object]]) -> str:
    return "\n".join(f"{k}={v}" for k, v in pairs)


def format_quality_report(report: QualityReport, style: ReportFormat = "text") -> str:
    verdict = "identical" if report.histograms_identical else "different"
    if style == "kv":
        pairs: list[tuple[str, object]] = [
            ("width", report.width),
            ("height", report.height),
            ("mse", format_number(report.mse)),
            ("psnr", format_number(report.psnr)),
        ]
        for c in report.channels:
            key = c.channel.lower()
            pairs += [
                (f"mse_{key}", format_number(c.mse)),
                (f"psnr_{key}", format_number(c.psnr)),
                (f"histogram_{key}", "identical" if c.histogram_identical else "different"),
                (f"differing_bins_{key}", c.differing_bins),
            ]
        pairs.append(("histograms", verdict))
        return _kv(pairs)

    lines = [
        f"Image size:  {report.width}x{report.height}",
        f"MSE:         {format_number(report.mse)}",
        f"PSNR (dB):   {format_number(report.psnr)}",
        "Per channel:",
    ]
    for c in report.channels:
        flag = "identical" if c.histogram_identical else f"{c.differing_bins} bins differ"
        lines.append(
            f"  {c.channel}: MSE={format_number(c.mse)} PSNR={format_number(c.psnr)} "
            f"histogram {flag}"
        )
    lines.append(f"Histograms:  {verdict}")
    return "\n".join(lines)


def format_capacity_report(report: CapacityReport, style: ReportFormat = "text") -> str:
    est = report.estimate
    if style == "kv":
        pairs: list[tuple[str, object]] = [
            ("width", est.width),
            ("height", est.height),
            ("total_samples", est.total_samples),
            ("bits_exact", est.estimated_match_bits),
            ("bits_paper_rounded", est.rounded_bits),
            ("characters_exact", est.estimated_characters),
            ("characters_paper_rounded", est.rounded_characters),
        ]
        if report.empirical is not None:
            pairs += [
                ("empirical_bits", report.empirical.matched_bits),
                ("empirical_characters", report.empirical.matched_characters),
            ]
        return _kv(pairs)

    lines = [
        f"Image size:                 {est.width}x{est.height}",
        f"Total samples:              {est.total_samples}",
        f"Bits (exact):               {est.estimated_match_bits}",
        f"Bits (paper-rounded):       {est.rounded_bits}",
        f"Characters (exact):         {est.estimated_characters}",
        f"Characters (paper-rounded): {est.rounded_characters}",
    ]
    if report.empirical is not None:
        lines += [
            f"Measured on {report.image_path} with {report.empirical.sample_text!r}:",
            f"  bits matched:       {report.empirical.matched_bits}",
            f"  characters matched: {report.empirical.matched_characters}",
        ]
    return "\n".join(lines)


def format_hide_summary(result: HideResult) -> str:
    return "\n".join(
        [
            f"positions: {result.position_count}",
            f"scan extent: {result.last_position}/{result.total_samples} "
            f"({result.scan_extent:.2%})",
            f"capacity utilization: {result.position_count}/"
            f"{result.capacity.estimated_match_bits} bits ({result.capacity_utilization:.2%})",
        ]
    )


def format_inspect(result: InspectResult, style: ReportFormat = "text") -> str:
    if style == "kv":
        return _kv(
            [
                ("width", result.width),
                ("height", result.height),
                ("channel_order", result.channel_order),
                ("name_length", result.name_length),
                ("position_count", len(result.positions)),
                ("positions", ",".join(str(p) for p in result.positions)),
            ]
        )

    lines = [
        f"Cover size:     {result.width}x{result.height}",
        f"Channel order:  {result.channel_order}",
        f"Name length:    {result.name_length}",
        f"Positions:      {len(result.positions)}",
    ]
    for start in range(0, len(result.positions), POSITIONS_PER_ROW):
        row = result.positions[start : start + POSITIONS_PER_ROW]
        lines.append("\t".join(str(p) for p in row))
    return "\n".join(lines)
