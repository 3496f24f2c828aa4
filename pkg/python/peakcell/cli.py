"""
Command-line front end

    peakcell generate --kind sin --n 500 | peakcell render --steps 128 -o out.pbm
    peakcell analyze series.csv --column 1 -o report.json

Exit codes: 0 success, 1 usage error, 2 input/parse error, 3 I/O error.
Payload goes to the output path or stdout; diagnostics go to stderr.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .analysis import InstabilityMeasure, analyze
from .config import Settings, load_settings
from .core import Series, default_steps, iterate
from .errors import (
    ConfigError,
    InvalidArgumentError,
    InvalidInputError,
    ParseError,
    UnsupportedFormatError,
)
from .ingest import SyntheticKind, SyntheticSpec, format_series_csv, generate, parse_csv
from .logging_setup import configure_logging
from .render import RenderFormat, RenderSpec, render_raster

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_IO = 3

STDIO = "-"
REPORT_SCHEMA_VERSION = 1


class UsageError(Exception):
    def __init__(self, message: str, help_text: str = ""):
        super().__init__(message)
        self.help_text = help_text


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: error: {message}", self.format_help())


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _unit_fraction(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in (0, 1], got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid number: {text!r}") from None
    if not value > 0.0 or value == float("inf"):
        raise argparse.ArgumentTypeError(f"must be a positive finite number, got {text}")
    return value


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", default=STDIO, help="CSV file, or - for stdin")
    parser.add_argument(
        "--column", type=_non_negative_int, default=0, help="zero-based CSV column (default 0)"
    )
    parser.add_argument(
        "--steps",
        type=_positive_int,
        default=None,
        help="number of smoothing steps K (default min(N, max_default_steps))",
    )
    parser.add_argument("-o", "--output", default=STDIO, help="output path, or - for stdout")


def _add_render_options(parser: argparse.ArgumentParser, settings: Settings) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in RenderFormat],
        default=settings.render.format,
        help=f"image format (default {settings.render.format})",
    )
    parser.add_argument(
        "--cell-size",
        type=_positive_int,
        default=settings.render.cell_size,
        help="pixels per cell",
    )
    parser.add_argument(
        "--composite", action="store_true", help="draw the source series above the diagram"
    )
    parser.add_argument(
        "--panel-height",
        type=_positive_int,
        default=settings.render.panel_height,
        help="height of the source panel in composite mode",
    )


def _add_analysis_options(parser: argparse.ArgumentParser, settings: Settings) -> None:
    a = settings.analysis
    parser.add_argument("--max-periods", type=_positive_int, default=a.max_periods)
    parser.add_argument("--window", type=_positive_int, default=a.instability_window)
    parser.add_argument("--threshold", type=_unit_fraction, default=a.instability_threshold)
    parser.add_argument(
        "--measure",
        choices=[m.value for m in InstabilityMeasure],
        default=a.instability_measure,
        help="instability density measure",
    )
    parser.add_argument("--rows", type=_positive_int, default=a.instability_rows)
    parser.add_argument("--stationary-min", type=_positive_int, default=a.stationary_min_length)
    parser.add_argument("--image", default=None, help="also write the rendered diagram here")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="peakcell",
        description="Peak-smoothing cellular diagrams for series of measurements",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        choices=["debug", "info", "warning", "error"],
        default=None,
        help="override the configured log level",
    )
    sub = parser.add_subparsers(dest="command", metavar="{render,analyze,generate}")
    sub.required = True

    render = sub.add_parser("render", help="render the cellular diagram of a series")
    _add_input_options(render)
    _add_render_options(render, settings)

    analyze_cmd = sub.add_parser("analyze", help="write a JSON feature report for a series")
    _add_input_options(analyze_cmd)
    _add_analysis_options(analyze_cmd, settings)
    _add_render_options(analyze_cmd, settings)

    gen = sub.add_parser("generate", help="write a synthetic series as CSV")
    gen.add_argument("--kind", required=True, choices=[k.value for k in SyntheticKind])
    gen.add_argument("--n", required=True, type=_positive_int, help="number of samples")
    gen.add_argument(
        "--scale", type=_positive_float, default=None, help="x step for trigonometric kinds"
    )
    gen.add_argument("-o", "--output", default=STDIO, help="output path, or - for stdout")
    return parser


def _read_series(path: str, column: int) -> Series:
    if path == STDIO:
        return parse_csv(sys.stdin, column)
    with open(path, "r", encoding="utf-8", newline="") as fh:
        return parse_csv(fh, column)


def _write_output(path: str, data: bytes) -> None:
    if path == STDIO:
        stream = getattr(sys.stdout, "buffer", None)
        if stream is None:
            sys.stdout.write(data.decode("utf-8"))
        else:
            stream.write(data)
        sys.stdout.flush()
        return
    Path(path).write_bytes(data)
    logger.info("Wrote %d bytes to %s", len(data), path)


def _render_spec(args: argparse.Namespace) -> RenderSpec:
    return RenderSpec(
        format=RenderFormat.parse(args.format),
        cell_size=args.cell_size,
        composite=args.composite,
        panel_height=args.panel_height,
    )


def _steps_for(series: Series, args: argparse.Namespace, settings: Settings) -> int:
    if args.steps is not None:
        return args.steps
    return max(1, default_steps(len(series), settings.iteration.max_default_steps))


def _cmd_render(args: argparse.Namespace, settings: Settings) -> None:
    spec = _render_spec(args)
    series = _read_series(args.input, args.column)
    diagram = iterate(series, _steps_for(series, args, settings))
    _write_output(args.output, render_raster(diagram, spec))


def _cmd_analyze(args: argparse.Namespace, settings: Settings) -> None:
    if args.image == STDIO:
        raise UsageError("peakcell analyze: error: --image needs a file path, not -")
    spec = _render_spec(args) if args.image else None
    series = _read_series(args.input, args.column)
    diagram = iterate(series, _steps_for(series, args, settings))
    report = analyze(
        diagram,
        max_periods=args.max_periods,
        floor=settings.analysis.acf_floor,
        harmonic_tolerance=settings.analysis.harmonic_tolerance,
        window=args.window,
        threshold=args.threshold,
        measure=args.measure,
        rows=args.rows,
        stationary_min_length=args.stationary_min,
    )
    payload = {"schema_version": REPORT_SCHEMA_VERSION, **report.to_dict()}
    text = json.dumps(payload, indent=2) + "\n"
    if spec is not None:
        _write_output(args.image, render_raster(diagram, spec))
    _write_output(args.output, text.encode("utf-8"))


def _cmd_generate(args: argparse.Namespace, settings: Settings) -> None:
    spec = (
        SyntheticSpec(args.kind, args.n)
        if args.scale is None
        else SyntheticSpec(args.kind, args.n, args.scale)
    )
    _write_output(args.output, format_series_csv(generate(spec)).encode("utf-8"))


_COMMANDS = {
    "render": _cmd_render,
    "analyze": _cmd_analyze,
    "generate": _cmd_generate,
}


def _report(message: str) -> None:
    print(message, file=sys.stderr)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run the CLI

    Args:
        argv: Arguments without the program name (default sys.argv[1:])

    Returns:
        Process exit code
    """
    args_list: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        settings = load_settings()
        parser = build_parser(settings)
        args = parser.parse_args(args_list)
        log_settings = settings.logging
        if args.log_level:
            log_settings = replace(log_settings, level=args.log_level)
        configure_logging(log_settings)
        logger.info("Running %s", args.command)
        _COMMANDS[args.command](args, settings)
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)
    except UsageError as e:
        _report(str(e))
        if e.help_text:
            _report(e.help_text)
        return EXIT_USAGE
    except (ParseError, InvalidInputError) as e:
        logger.debug("Input error: %s", e)
        _report(f"peakcell: input error: {e}")
        return EXIT_INPUT
    except (InvalidArgumentError, UnsupportedFormatError, ConfigError) as e:
        logger.debug("Invalid argument: %s", e)
        _report(f"peakcell: error: {e}")
        return EXIT_USAGE
    except OSError as e:
        logger.debug("I/O error: %s", e)
        _report(f"peakcell: I/O error: {e}")
        return EXIT_IO
    logger.info("Finished %s", args.command)
    return EXIT_OK


def main() -> int:
    return run()
