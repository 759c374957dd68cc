"""Command-line interface."""

from .app import build_parser, main, run, setup_logging
from .commands import (
    COMMANDS,
    EXIT_ERROR,
    EXIT_NOT_CERTIFIED,
    EXIT_OK,
    CommandResult,
    cmd_beta,
    cmd_certify,
    cmd_measure,
    cmd_simulate,
    cmd_sync,
)
from .repro import build_report, format_table
from .settings import CliSettings

__all__ = [
    "COMMANDS",
    "EXIT_ERROR",
    "EXIT_NOT_CERTIFIED",
    "EXIT_OK",
    "CliSettings",
    "CommandResult",
    "build_parser",
    "build_report",
    "cmd_beta",
    "cmd_certify",
    "cmd_measure",
    "cmd_simulate",
    "cmd_sync",
    "format_table",
    "main",
    "run",
    "setup_logging",
]
