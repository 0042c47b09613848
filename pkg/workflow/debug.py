"""Debug utilities for workflow results.

Banners go to stderr so that command output on stdout stays parseable.
"""

import json
import sys
from typing import Any, Dict, Optional

from config import StegoSettings, get_settings
from stego.models import QualityReport
from workflow.models import HideResult, RevealResult


def _emit(text: str = "") -> None:
    print(text, file=sys.stderr)


def is_debug_enabled(settings: Optional[StegoSettings] = None) -> bool:
    """Check if debug mode is enabled.

    Args:
        settings: Settings in use; loaded from the environment when omitted

    Returns:
        True if the DEBUG setting is truthy ('true', '1', 'yes', ...)
    """
    return (settings if settings is not None else get_settings()).debug


def print_hide_result(result: HideResult, settings: Optional[StegoSettings] = None) -> None:
    """Print a hide result in a formatted way.

    Args:
        result: HideResult to print
        settings: Settings deciding whether DEBUG is on
    """
    if not is_debug_enabled(settings):
        return

    _emit("\n" + "=" * 80)
    _emit("🔍 HIDE RESULT")
    _emit("=" * 80)
    _emit(f"Cover:          {result.cover_path} ({result.width}x{result.height})")
    _emit(f"Position file:  {result.posfile_path}")
    _emit(f"Message chars:  {result.message_length}")
    _emit(f"Bound name:     {result.bound_name or '(none)'}")
    _emit(f"Positions:      {result.position_count}")
    _emit(f"Last position:  {result.last_position} / {result.total_samples}")
    _emit(f"Scan extent:    {result.scan_extent:.2%}")
    _emit("=" * 80 + "\n")


def print_reveal_result(
    result: RevealResult, settings: Optional[StegoSettings] = None
) -> None:
    """Print a reveal result in a formatted way.

    Args:
        result: RevealResult to print
        settings: Settings deciding whether DEBUG is on
    """
    if not is_debug_enabled(settings):
        return

    _emit("\n" + "=" * 80)
    _emit("📥 REVEAL RESULT")
    _emit("=" * 80)
    _emit(f"Positions read: {result.position_count}")
    _emit(f"File dims:      {result.posfile_width}x{result.posfile_height}")
    _emit(f"Cover dims:     {result.cover_width}x{result.cover_height}")
    _emit(f"Dims match:     {'✅ YES' if result.dims_match else '❌ NO'}")
    _emit(f"Message:        {result.message[:100]}{'...' if len(result.message) > 100 else ''}")
    if result.bound_name:
        _emit(f"Bound name:     {result.bound_name}")
    for warning in result.warnings:
        _emit(f"Warning:        {warning}")
    _emit("=" * 80 + "\n")


def print_quality_report(
    report: QualityReport, settings: Optional[StegoSettings] = None
) -> None:
    """Print per-channel distortion with a histogram verdict bar.

    Args:
        report: QualityReport to print
        settings: Settings deciding whether DEBUG is on
    """
    if not is_debug_enabled(settings):
        return

    _emit("\n" + "=" * 80)
    _emit("📊 QUALITY REPORT")
    _emit("=" * 80)
    for channel in report.channels:
        status = "✅" if channel.histogram_identical else "❌"
        bar = "█" * min(channel.differing_bins, 40)
        _emit(f"  {status} {channel.channel}: mse={channel.mse:.6f} differing bins {bar}")
    _emit("=" * 80 + "\n")


def print_phase_trace(
    phase_trace: list[str], settings: Optional[StegoSettings] = None
) -> None:
    """Print the steps a workflow went through.

    Args:
        phase_trace: Ordered step descriptions
        settings: Settings deciding whether DEBUG is on
    """
    if not is_debug_enabled(settings):
        return

    _emit("\n[PHASE TRACE]")
    for line in phase_trace:
        _emit(f"- {line}")
    _emit()


def print_json_debug(
    data: Dict[str, Any], label: str = "DEBUG", settings: Optional[StegoSettings] = None
) -> None:
    """Print JSON data in a formatted way.

    Args:
        data: Dictionary to print as JSON
        label: Label for the debug output
        settings: Settings deciding whether DEBUG is on
    """
    if not is_debug_enabled(settings):
        return

    _emit(f"\n[{label}]")
    _emit(json.dumps(data, indent=2, ensure_ascii=False, default=str))
    _emit()
