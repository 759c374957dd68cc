"""Command-line entry point."""

from __future__ import annotations

import argparse
import asyncio
import inspect
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

import colorlog

from ..errors import ConfigError, ContractionError
from ..models.config import RunConfig, parse_config_text
from ..output import read_text, to_json_text, write_text
from .commands import COMMANDS, EXIT_ERROR, EXIT_OK, CommandResult
from .repro import build_report, format_table
from .settings import CliSettings

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_COLORS = {
    "DEBUG": "cyan",
    "INFO": "green",
    "WARNING": "yellow",
    "ERROR": "red",
    "CRITICAL": "red,bg_white",
}


def setup_logging(level: str = "INFO") -> None:
    """Configure the root logger with colorlog on stderr (once per process)."""
    root = colorlog.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, "_swcert", False):
            root.removeHandler(handler)
    handler = colorlog.StreamHandler(sys.stderr)
    handler.setFormatter(
        colorlog.ColoredFormatter(fmt=LOG_FORMAT, datefmt="%Y-%m-%d %H:%M:%S", log_colors=LOG_COLORS)
    )
    handler._swcert = True  # type: ignore[attr-defined]
    root.addHandler(handler)
    root.setLevel(level)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", "-o", type=Path, help="Output path (default: standard output)")
    common.add_argument("--seed", type=int, help="Seed for sampled coefficients (default: SWCERT_SEED or 0)")
    common.add_argument("--dt", type=float, help="Integration step in seconds (default: SWCERT_DT or 1e-3)")
    common.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        type=str.upper,
        help="Log level (default: SWCERT_LOG_LEVEL or INFO)",
    )

    parser = argparse.ArgumentParser(
        prog="switched-contraction",
        description="Contraction certificates for switched systems with multiple norms",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "measure": "Matrix measure of one mode under its norm",
        "beta": "Transaction coefficient between two norms",
        "certify": "Averaged contraction condition over a switching schedule",
        "simulate": "Simulate the switched system (CSV trajectory)",
        "sync": "Synchronisation condition for a blinking network",
    }
    for name, text in helps.items():
        cmd = sub.add_parser(name, parents=[common], help=text)
        cmd.add_argument("--config", "-c", type=Path, required=True, help="Run configuration JSON")
    repro = sub.add_parser("repro", parents=[common], help="Recompute the published example numbers")
    repro.add_argument("--format", choices=["json", "text"], default="text", help="Report format (default: text)")
    return parser


async def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        await write_text(out, text)


async def load_config(path: Path) -> RunConfig:
    return parse_config_text(await read_text(path))


async def run_command(args: argparse.Namespace, settings: CliSettings) -> int:
    out = settings.resolve_output(args.out)
    if args.command == "repro":
        report = await build_report()
        text = to_json_text(report, settings.float_digits) if args.format == "json" else format_table(report)
        await _emit(text, out)
        return EXIT_OK

    config = await load_config(args.config)
    section, command = COMMANDS[args.command]
    if getattr(config, section) is None:
        raise ConfigError(section, f"the {args.command} command needs a '{section}' section")
    outcome = command(config, settings)
    result: CommandResult = await outcome if inspect.isawaitable(outcome) else outcome

    json_text = to_json_text(result.payload, settings.float_digits)
    if result.csv is None:
        await _emit(json_text, out)
    elif out is None:
        sys.stdout.write(result.csv)
        logger.info("Summary: %s", json_text.strip())
    else:
        await write_text(out, result.csv)
        await write_text(out.with_name(out.name + ".json"), json_text)
    return result.exit_code


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return the exit code (0 ok/certified, 2 not certified, 1 error)."""
    args = build_parser().parse_args(argv)
    try:
        settings = CliSettings.from_env().with_overrides(args.dt, args.seed, args.log_level)
    except ConfigError as e:
        setup_logging()
        logger.error("%s", e)
        return EXIT_ERROR
    setup_logging(settings.log_level)

    try:
        return asyncio.run(run_command(args, settings))
    except (ContractionError, OSError) as e:
        logger.error("%s", e)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())
