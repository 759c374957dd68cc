"""Runtime settings with environment overrides."""

from __future__ import annotations

import logging
import os
from collections.abc import Callable
from dataclasses import dataclass, replace
from pathlib import Path

from dotenv import load_dotenv

from ..errors import ConfigError

ENV_PREFIX = "SWCERT_"


def _env[T](name: str, cast: Callable[[str], T]) -> T | None:
    raw = os.environ.get(f"{ENV_PREFIX}{name}")
    if raw is None or raw == "":
        return None
    try:
        return cast(raw)
    except ValueError as e:
        raise ConfigError(f"env.{ENV_PREFIX}{name}", str(e)) from e


@dataclass(frozen=True)
class CliSettings:
    """Settings shared by every subcommand."""

    # Integration step for simulate (seconds)
    dt: float = 1e-3
    # Seed for sampled coefficients
    seed: int = 0
    log_level: str = "INFO"
    # Significant digits in JSON and CSV output
    float_digits: int = 12
    output_dir: Path | None = None

    @classmethod
    def from_env(cls) -> CliSettings:
        """Defaults overridden by SWCERT_* variables (a .env file is honoured)."""
        load_dotenv()
        settings = cls()
        dt = _env("DT", float)
        seed = _env("SEED", int)
        level = _env("LOG_LEVEL", str)
        output_dir = _env("OUTPUT_DIR", Path)
        if dt is not None:
            settings = replace(settings, dt=dt)
        if seed is not None:
            settings = replace(settings, seed=seed)
        if level is not None:
            settings = replace(settings, log_level=level.upper())
        if output_dir is not None:
            settings = replace(settings, output_dir=output_dir)
        settings.validate()
        return settings

    def with_overrides(
        self,
        dt: float | None = None,
        seed: int | None = None,
        log_level: str | None = None,
    ) -> CliSettings:
        """Apply command-line flags on top of the environment."""
        settings = replace(
            self,
            dt=self.dt if dt is None else dt,
            seed=self.seed if seed is None else seed,
            log_level=self.log_level if log_level is None else log_level.upper(),
        )
        settings.validate()
        return settings

    def validate(self) -> None:
        if not self.dt > 0.0:
            raise ConfigError("settings.dt", f"dt must be positive, got {self.dt}")
        if self.seed < 0:
            raise ConfigError("settings.seed", f"seed must be non-negative, got {self.seed}")
        if logging.getLevelName(self.log_level) == f"Level {self.log_level}":
            raise ConfigError("settings.log_level", f"unknown log level {self.log_level!r}")

    def resolve_output(self, path: Path | None) -> Path | None:
        if path is None or path.is_absolute() or self.output_dir is None:
            return path
        return self.output_dir / path
