"""
Series input and output

CSV parsing, the synthetic test signals and mask export.
"""

import csv
import io
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, TextIO, Union

import numpy as np

from .core import Diagram, Series
from .errors import EmptyInputError, InvalidArgumentError, ParseError

logger = logging.getLogger(__name__)

DEFAULT_SCALE = 2 * math.pi / 50
WEEKLY_PATTERN = (5.0, 9.0, 9.0, 9.0, 9.0, 9.0, 4.0)
BURST_LENGTH = 40
BURST_AMPLITUDE = 4.0


class SyntheticKind(str, Enum):
    SIN = "sin"
    X_SIN = "x_sin"
    SIN_PLUS_COS3X = "sin_plus_cos3x"
    PARABOLA = "parabola"
    SPIKE = "spike"
    SAWTOOTH = "sawtooth"
    WEEKLY = "weekly"
    CONSTANT = "constant"
    LINEAR = "linear"
    BURST = "burst"

    @property
    def trigonometric(self) -> bool:
        return self in (SyntheticKind.SIN, SyntheticKind.X_SIN, SyntheticKind.SIN_PLUS_COS3X)


@dataclass(frozen=True)
class SyntheticSpec:
    kind: SyntheticKind
    n: int
    scale: float = DEFAULT_SCALE

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", SyntheticKind(self.kind))
        except ValueError:
            raise InvalidArgumentError(f"unknown synthetic kind {self.kind!r}") from None
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise InvalidArgumentError(f"n must be a positive integer, got {self.n!r}")
        if self.kind.trigonometric and not (math.isfinite(self.scale) and self.scale > 0):
            raise InvalidArgumentError(f"scale must be positive and finite, got {self.scale!r}")


def _parse_value(field: str, line: int) -> float:
    try:
        value = float(field.strip())
    except ValueError:
        raise ParseError(f"not a number: {field.strip()!r}", line) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite value {field.strip()!r}", line)
    return value


def parse_csv(text: Union[str, TextIO], column: int = 0) -> Series:
    """
    Read one column of comma-separated records into a Series

    Blank lines are skipped. If the selected field of the first record is not
    a number, that record is treated as a header.

    Args:
        text: CSV text or an open text stream
        column: Zero-based column index

    Returns:
        Series of the column's values

    Raises:
        ParseError: a field is not a finite number, the column is missing or
            the stream cannot be decoded
        EmptyInputError: no data rows
    """
    if column < 0:
        raise InvalidArgumentError(f"column must be non-negative, got {column}")
    if isinstance(text, str):
        text = io.StringIO(text)

    try:
        values = _read_column(text, column)
    except UnicodeDecodeError as e:
        raise ParseError(f"input is not valid {e.encoding} text: {e.reason}") from None

    if not values:
        raise EmptyInputError("no data rows")
    logger.debug("Parsed %d values from column %d", len(values), column)
    return Series(values)


def _read_column(text: TextIO, column: int) -> List[float]:
    values: List[float] = []
    first_record = True
    for line_number, line in enumerate(text, start=1):
        line = line.rstrip("\r\n")
        if not line.strip():
            continue
        fields = next(csv.reader([line]))
        if column >= len(fields):
            raise ParseError(
                f"column {column} out of range, record has {len(fields)} field(s)", line_number
            )
        if first_record:
            first_record = False
            try:
                values.append(_parse_value(fields[column], line_number))
            except ParseError:
                logger.debug("Skipping header on line %d: %r", line_number, line)
            continue
        values.append(_parse_value(fields[column], line_number))
    return values


def format_series_csv(series: Union[Series, List[float]]) -> str:
    """One value per line, shortest representation that reads back exactly"""
    values = series.values.tolist() if isinstance(series, Series) else list(series)
    return "".join(f"{float(v)!r}\n" for v in values)


def generate(spec: SyntheticSpec) -> Series:
    """
    Build one of the synthetic test signals

    Example:
        >>> list(generate(SyntheticSpec(SyntheticKind.WEEKLY, 9)))
        [5.0, 9.0, 9.0, 9.0, 9.0, 9.0, 4.0, 5.0, 9.0]
    """
    n, kind = spec.n, spec.kind
    t = np.arange(n, dtype=np.float64)
    x = spec.scale * t

    if kind is SyntheticKind.SIN:
        values = np.sin(x)
    elif kind is SyntheticKind.X_SIN:
        values = x * np.sin(x)
    elif kind is SyntheticKind.SIN_PLUS_COS3X:
        values = np.sin(x) + np.cos(3 * x)
    elif kind is SyntheticKind.PARABOLA:
        values = -((t - (n - 1) / 2) ** 2)
    elif kind is SyntheticKind.SPIKE:
        values = np.zeros(n)
        values[n // 2] = 1.0
    elif kind is SyntheticKind.SAWTOOTH:
        values = t % 2
    elif kind is SyntheticKind.WEEKLY:
        values = np.resize(np.array(WEEKLY_PATTERN), n)
    elif kind is SyntheticKind.CONSTANT:
        values = np.ones(n)
    elif kind is SyntheticKind.LINEAR:
        values = t.copy()
    else:
        values = t.copy()
        start = max(0, (n - BURST_LENGTH) // 2)
        stop = min(n, start + BURST_LENGTH)
        k = np.arange(start, stop)
        jitter = ((k * 37 + 11) % 17) / 16 - 0.5
        values[start:stop] = t[start:stop] + BURST_AMPLITUDE * jitter

    return Series(values)


def export_mask_csv(diagram: Diagram) -> str:
    """K lines of N comma-separated 0/1 flags, 1 meaning black"""
    if diagram.steps < 1:
        raise InvalidArgumentError("cannot export a diagram with no steps (K = 0)")
    rows = diagram.masks.astype(np.int8).tolist()
    return "".join(",".join(str(v) for v in row) + "\n" for row in rows)
