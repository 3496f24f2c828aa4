"""
Raster and text rendering of cellular diagrams

Mask rows are drawn top to bottom in step order (step 1 on top), columns
follow the series index. Black cells are ink (pixel value 0), white cells
take the maximum value. Composite mode puts a plot of the source series
above the grid, separated by one blank row.
"""

import io
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Union

import numpy as np
import png

from .core import Diagram, Series
from .errors import InvalidArgumentError, UnsupportedFormatError

logger = logging.getLogger(__name__)

MIN_PANEL_HEIGHT = 8
BLACK_CHAR = "#"
WHITE_CHAR = "."


class RenderFormat(str, Enum):
    PBM_P4 = "pbm"
    PGM_P5 = "pgm"
    PNG = "png"
    ASCII = "ascii"

    @classmethod
    def parse(cls, value: Union["RenderFormat", str]) -> "RenderFormat":
        if isinstance(value, cls):
            return value
        lowered = str(value).lower()
        for fmt in cls:
            if lowered in (fmt.value, fmt.name.lower()):
                return fmt
        raise UnsupportedFormatError(
            f"unsupported format {value!r} (expected one of {', '.join(f.value for f in cls)})"
        )


@dataclass(frozen=True)
class RenderSpec:
    """
    Output options

    cell_size scales every cell (and the panel) to a square of pixels;
    panel_height is the source panel height in cells and only matters when
    composite is set.
    """

    format: RenderFormat = RenderFormat.PBM_P4
    cell_size: int = 1
    composite: bool = False
    panel_height: int = 64

    def __post_init__(self):
        object.__setattr__(self, "format", RenderFormat.parse(self.format))
        if self.cell_size < 1:
            raise InvalidArgumentError(f"cell_size must be >= 1, got {self.cell_size}")
        if self.composite and self.panel_height < MIN_PANEL_HEIGHT:
            raise InvalidArgumentError(
                f"panel_height must be >= {MIN_PANEL_HEIGHT} in composite mode, "
                f"got {self.panel_height}"
            )


def _require_steps(diagram: Diagram) -> None:
    if diagram.steps < 1:
        raise InvalidArgumentError("cannot render a diagram with no steps (K = 0)")


def source_panel(source: Series, height: int) -> np.ndarray:
    """
    Plot of the source as a (height, N) ink grid

    Values are min-max normalised with the maximum on the top row; a constant
    series becomes a horizontal line through the middle row.
    """
    values = source.values
    n = len(values)
    panel = np.zeros((height, n), dtype=bool)
    if n == 0:
        return panel
    low, high = float(values.min()), float(values.max())
    if high == low:
        rows = np.full(n, height // 2, dtype=np.int64)
    else:
        span = high - low
        if np.isfinite(span):
            scaled = (high - values) / span
        else:
            # the range itself overflows; halves keep every term finite
            scaled = (high / 2 - values / 2) / (high / 2 - low / 2)
        rows = np.clip(np.rint(scaled * (height - 1)), 0, height - 1).astype(np.int64)
    panel[rows, np.arange(n)] = True
    return panel


def ink_grid(diagram: Diagram, spec: RenderSpec) -> np.ndarray:
    """Boolean pixel grid (True = ink) before encoding"""
    grid = diagram.masks
    if spec.composite:
        panel = source_panel(diagram.source, spec.panel_height)
        gap = np.zeros((1, diagram.n), dtype=bool)
        grid = np.vstack((panel, gap, grid))
    if spec.cell_size > 1:
        grid = np.repeat(np.repeat(grid, spec.cell_size, axis=0), spec.cell_size, axis=1)
    return grid


def encode_pbm(ink: np.ndarray) -> bytes:
    """Netpbm P4: one bit per pixel, 1 = ink, rows padded to whole bytes"""
    height, width = ink.shape
    header = f"P4\n{width} {height}\n".encode("ascii")
    return header + np.packbits(ink, axis=1).tobytes()


def encode_pgm(ink: np.ndarray) -> bytes:
    """Netpbm P5 with maxval 255; ink is 0, background 255"""
    height, width = ink.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + np.where(ink, 0, 255).astype(np.uint8).tobytes()


def encode_png(ink: np.ndarray) -> bytes:
    """8-bit greyscale, non-interlaced PNG of the same pixels as encode_pgm"""
    height, width = ink.shape
    if width == 0 or height == 0:
        raise InvalidArgumentError("PNG cannot encode an image with a zero dimension")
    pixels = np.where(ink, 0, 255).astype(np.uint8)
    writer = png.Writer(width=width, height=height, greyscale=True, bitdepth=8)
    buffer = io.BytesIO()
    writer.write(buffer, pixels.tolist())
    return buffer.getvalue()


def encode_ascii(ink: np.ndarray) -> bytes:
    lines = ["".join(row) for row in np.where(ink, BLACK_CHAR, WHITE_CHAR).tolist()]
    return "".join(line + "\n" for line in lines).encode("ascii")


_ENCODERS = {
    RenderFormat.PBM_P4: encode_pbm,
    RenderFormat.PGM_P5: encode_pgm,
    RenderFormat.PNG: encode_png,
    RenderFormat.ASCII: encode_ascii,
}


def render_raster(diagram: Diagram, spec: RenderSpec = RenderSpec()) -> bytes:
    """
    Render a diagram to image bytes

    Args:
        diagram: Diagram with K >= 1
        spec: Output options

    Returns:
        Encoded image of (N * cell_size) x (K * cell_size) pixels, plus
        (panel_height + 1) * cell_size rows in composite mode

    Example:
        >>> render_raster(iterate([0, 1, 0], 1))
        b'P4\\n3 1\\n@'
    """
    _require_steps(diagram)
    fmt = RenderFormat.parse(spec.format)
    ink = ink_grid(diagram, spec)
    data = _ENCODERS[fmt](ink)
    logger.debug(
        "Rendered %s %dx%d (%d bytes)", fmt.value, ink.shape[1], ink.shape[0], len(data)
    )
    return data


def render_ascii(diagram: Diagram) -> str:
    """One line per step, '#' for black and '.' for white"""
    _require_steps(diagram)
    return encode_ascii(diagram.masks).decode("ascii")
