"""
Logging configuration driven by the [logging] section of config.toml
"""

import json
import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path

from .config import LoggingSettings
from .errors import ConfigError

LOG_FILE_NAME = "peakcell.log"
TEXT_FORMAT = "%(asctime)s %(levelname)-7s %(name)s: %(message)s"


class JsonFormatter(logging.Formatter):
    """One JSON object per record"""

    def format(self, record: logging.LogRecord) -> str:
        payload = {
            "timestamp": self.formatTime(record, "%Y-%m-%dT%H:%M:%S"),
            "level": record.levelname.lower(),
            "target": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            payload["exception"] = self.formatException(record.exc_info)
        return json.dumps(payload)


def _formatter(fmt: str) -> logging.Formatter:
    if fmt == "json":
        return JsonFormatter()
    if fmt == "text":
        return logging.Formatter(TEXT_FORMAT)
    raise ConfigError(f"unknown log format {fmt!r} (expected text or json)")


def configure_logging(settings: LoggingSettings) -> logging.Logger:
    """
    Install handlers on the package logger

    Records always go to stderr so they never mix with payload written to
    stdout. With file_logging enabled a size-rotated file is added in log_dir.

    Args:
        settings: The [logging] section

    Returns:
        The configured "peakcell" logger
    """
    level = logging.getLevelName(settings.level.upper())
    if not isinstance(level, int):
        raise ConfigError(f"unknown log level {settings.level!r}")

    root = logging.getLogger("peakcell")
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    root.setLevel(level)
    root.propagate = False

    formatter = _formatter(settings.format)
    console = logging.StreamHandler(sys.stderr)
    console.setFormatter(formatter)
    root.addHandler(console)

    if settings.file_logging:
        log_dir = Path(settings.log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_dir / LOG_FILE_NAME,
            maxBytes=settings.max_file_size * 1024 * 1024,
            backupCount=settings.max_files,
        )
        file_handler.setFormatter(formatter)
        root.addHandler(file_handler)

    return root
