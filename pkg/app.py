"""Command-line interface for position-matching steganography.

Exit codes: 0 success, 1 usage/IO/settings error, 2 insufficient capacity, 3 non-ASCII
message, 4 bad image, 5 wrong key, 6 malformed position file or a position/read past
the cover, 7 dimension mismatch.
"""

import argparse
import getpass
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from config import StegoSettings, get_settings
from posfile.models import SecretKey
from stego.errors import NonAsciiCharacter, StegoError
from workflow.debug import print_json_debug, print_quality_report
from workflow.orchestrator import StegoWorkflow
from workflow.report import (
    format_capacity_report,
    format_hide_summary,
    format_inspect,
    format_number,
    format_quality_report,
)

EXIT_FAILURE = 1

logger = logging.getLogger("stegomatch")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit 1; code 2 means insufficient capacity."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_FAILURE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"{text} is negative")
    return value


def _add_message_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--message", help="secret message text")
    group.add_argument("--message-file", type=Path, help="read the secret message from a file")


def _add_key_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--key-insecure",
        metavar="KEY",
        help="secret key on the command line (visible in process lists; for scripts/tests)",
    )


def _add_format_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("text", "kv"), default="text", help="report style")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="stegomatch",
        description="Hide text by recording cover positions whose LSBs already match it.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hide", help="match a message against a cover and seal the positions")
    p.add_argument("cover", type=Path)
    _add_message_args(p)
    p.add_argument("--out", type=Path, required=True, help="position file to write")
    p.add_argument(
        "--bind-name",
        nargs="?",
        const="",
        default=None,
        metavar="NAME",
        help="append an image name to the message (defaults to the cover file name)",
    )
    p.add_argument("--seed", type=int, help="deterministic salt seed")
    _add_key_arg(p)
    p.set_defaults(handler=cmd_hide)

    p = sub.add_parser("reveal", help="recover a message with a cover and a position file")
    p.add_argument("cover", type=Path)
    p.add_argument("posfile", type=Path)
    p.add_argument("--output", type=Path, help="also store the message in this file")
    _add_key_arg(p)
    p.set_defaults(handler=cmd_reveal)

    p = sub.add_parser("analyze", help="MSE, PSNR and histogram comparison of two images")
    p.add_argument("image_a", type=Path)
    p.add_argument("image_b", type=Path)
    _add_format_arg(p)
    p.set_defaults(handler=cmd_analyze)

    p = sub.add_parser("capacity", help="capacity estimate for an image size")
    p.add_argument("width", type=_positive_int)
    p.add_argument("height", type=_positive_int)
    p.add_argument("--image", type=Path, help="also measure first-fit capacity on this cover")
    _add_format_arg(p)
    p.set_defaults(handler=cmd_capacity)

    p = sub.add_parser("baseline-embed", help="classical LSB replacement (writes a stego image)")
    p.add_argument("cover", type=Path)
    _add_message_args(p)
    p.add_argument("--out", type=Path, required=True, help="stego image to write")
    p.set_defaults(handler=cmd_baseline_embed)

    p = sub.add_parser("baseline-reveal", help="read an LSB-replacement message")
    p.add_argument("stego", type=Path)
    p.add_argument("--chars", type=_non_negative_int, required=True, help="message length")
    p.set_defaults(handler=cmd_baseline_reveal)

    p = sub.add_parser("inspect", help="dump the positions of a position file (needs the key)")
    p.add_argument("posfile", type=Path)
    _add_format_arg(p)
    _add_key_arg(p)
    p.set_defaults(handler=cmd_inspect)

    p = sub.add_parser("make-cover", help="write a random cover image")
    p.add_argument("width", type=_positive_int)
    p.add_argument("height", type=_positive_int)
    p.add_argument("out", type=Path)
    p.add_argument("--seed", type=int, help="random seed")
    p.set_defaults(handler=cmd_make_cover)

    return parser


def read_message(args: argparse.Namespace) -> str:
    """Inline message, or file contents minus one trailing newline.

    A byte above 0x7F is reported at its offset as a non-ASCII character.
    """
    if args.message is not None:
        return args.message
    data = args.message_file.read_bytes()
    for index, byte in enumerate(data):
        if byte > 0x7F:
            raise NonAsciiCharacter(index, data[index:].decode("utf-8", errors="replace")[:1])
    text = data.decode("ascii")
    if text.endswith("\r\n"):
        return text[:-2]
    if text.endswith("\n"):
        return text[:-1]
    return text


def resolve_key(args: argparse.Namespace, settings: StegoSettings) -> SecretKey:
    """--key-insecure, then STEGO_KEY, then an interactive prompt."""
    passphrase = args.key_insecure
    if passphrase is None:
        passphrase = settings.stego_key
    if passphrase is None:
        passphrase = getpass.getpass("Secret key: ")
    return SecretKey.from_passphrase(passphrase)


def cmd_hide(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    message = read_message(args)
    bind_name = args.bind_name
    if bind_name == "":
        bind_name = args.cover.stem
    key = resolve_key(args, workflow.settings)
    result = workflow.hide(args.cover, message, key, args.out, bind_name=bind_name, seed=args.seed)
    print(format_hide_summary(result))
    return 0


def cmd_reveal(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    key = resolve_key(args, workflow.settings)
    result = workflow.reveal(args.cover, args.posfile, key, output_path=args.output)
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    if result.bound_name:
        print(f"image name: {result.bound_name}", file=sys.stderr)
    print(result.message)
    return 0


def cmd_analyze(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    report = workflow.analyze(args.image_a, args.image_b)
    print_quality_report(report, workflow.settings)
    print(format_quality_report(report, args.format))
    return 0


def cmd_capacity(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    report = workflow.capacity(args.width, args.height, image_path=args.image)
    print_json_debug(report.model_dump(), label="CAPACITY", settings=workflow.settings)
    print(format_capacity_report(report, args.format))
    return 0


def cmd_baseline_embed(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    result = workflow.baseline_embed(args.cover, read_message(args), args.out)
    print(f"embedded {result.bit_count} bits into {result.stego_path}")
    print(f"MSE={format_number(result.quality.mse)} PSNR={format_number(result.quality.psnr)}")
    return 0


def cmd_baseline_reveal(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    print(workflow.baseline_reveal(args.stego, args.chars))
    return 0


def cmd_inspect(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    key = resolve_key(args, workflow.settings)
    print(format_inspect(workflow.inspect(args.posfile, key), args.format))
    return 0


def cmd_make_cover(args: argparse.Namespace, workflow: StegoWorkflow) -> int:
    cover = workflow.make_cover(args.width, args.height, args.out, seed=args.seed)
    print(f"wrote {cover.width}x{cover.height} cover to {args.out}")
    return 0


def _configure_logging(settings: StegoSettings, verbose: bool) -> None:
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(asctime)s [%(levelname)s] %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return the process exit status."""
    args = build_parser().parse_args(argv)

    try:
        settings = get_settings()
        _configure_logging(settings, args.verbose)
        return args.handler(args, StegoWorkflow(settings))
    except StegoError as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except (OSError, ValueError) as e:
        # pydantic's ValidationError for a bad environment value is a ValueError
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
