"""
Settings loaded from config.toml

The TOML file is the single source of truth for defaults. Lookup order:
explicit path, the PEAKCELL_CONFIG environment variable (a .env file is
honoured), ./config.toml, then the built-in values below, which mirror the
shipped file.
"""

import logging
import os
import sys
from dataclasses import dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import find_dotenv, load_dotenv

from .errors import ConfigError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "PEAKCELL_CONFIG"
LOG_LEVEL_ENV_VAR = "PEAKCELL_LOG_LEVEL"
DEFAULT_CONFIG_NAME = "config.toml"


@dataclass(frozen=True)
class LoggingSettings:
    level: str = "warning"
    format: str = "text"
    file_logging: bool = False
    log_dir: str = "./logs"
    max_file_size: int = 10
    max_files: int = 5


@dataclass(frozen=True)
class IterationSettings:
    max_default_steps: int = 256


@dataclass(frozen=True)
class AnalysisSettings:
    max_periods: int = 5
    acf_floor: float = 0.2
    harmonic_tolerance: int = 1
    instability_window: int = 16
    instability_threshold: float = 0.5
    instability_rows: int = 32
    instability_measure: str = "black"
    stationary_min_length: int = 16


@dataclass(frozen=True)
class RenderSettings:
    format: str = "pbm"
    cell_size: int = 1
    panel_height: int = 64


@dataclass(frozen=True)
class Settings:
    logging: LoggingSettings = field(default_factory=LoggingSettings)
    iteration: IterationSettings = field(default_factory=IterationSettings)
    analysis: AnalysisSettings = field(default_factory=AnalysisSettings)
    render: RenderSettings = field(default_factory=RenderSettings)


_SECTIONS = {
    "logging": LoggingSettings,
    "iteration": IterationSettings,
    "analysis": AnalysisSettings,
    "render": RenderSettings,
}


def _build_section(name: str, cls: type, raw: Dict[str, Any]) -> Any:
    defaults = cls()
    values = {}
    for f in fields(cls):
        if f.name not in raw:
            continue
        value = raw[f.name]
        expected = type(getattr(defaults, f.name))
        # TOML integers are acceptable where floats are expected
        if expected is float and isinstance(value, int) and not isinstance(value, bool):
            value = float(value)
        if not isinstance(value, expected) or (expected is int and isinstance(value, bool)):
            raise ConfigError(
                f"[{name}].{f.name} must be {expected.__name__}, got {type(value).__name__}"
            )
        values[f.name] = value
    return cls(**values)


def _resolve_path(path: Optional[Union[str, Path]]) -> Optional[Path]:
    if path is not None:
        return Path(path)
    env_path = os.getenv(CONFIG_ENV_VAR)
    if env_path:
        return Path(env_path)
    local = Path(DEFAULT_CONFIG_NAME)
    if local.is_file():
        return local
    return None


def load_settings(path: Optional[Union[str, Path]] = None) -> Settings:
    """
    Load settings from a TOML file

    Args:
        path: Optional explicit config path

    Returns:
        Settings with file values layered over the built-in defaults

    Raises:
        ConfigError: the file cannot be read, is not TOML, or has mistyped keys
    """
    load_dotenv(find_dotenv(usecwd=True))
    resolved = _resolve_path(path)
    raw: Dict[str, Any] = {}
    if resolved is not None:
        try:
            with open(resolved, "rb") as fh:
                raw = tomllib.load(fh)
        except OSError as e:
            raise ConfigError(f"cannot read config {resolved}: {e}") from e
        except tomllib.TOMLDecodeError as e:
            raise ConfigError(f"invalid TOML in {resolved}: {e}") from e
        logger.debug("Loaded settings from %s", resolved)

    sections = {}
    for name, cls in _SECTIONS.items():
        section = raw.get(name, {})
        if not isinstance(section, dict):
            raise ConfigError(f"[{name}] must be a table")
        sections[name] = _build_section(name, cls, section)

    env_level = os.getenv(LOG_LEVEL_ENV_VAR)
    if env_level:
        sections["logging"] = replace(sections["logging"], level=env_level)

    return Settings(**sections)
