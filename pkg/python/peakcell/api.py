"""
High-level Python API for PeakCell

Provides convenient functions for common tasks.
"""

from pathlib import Path
from typing import Any, Iterable, Optional, Union

from .analysis import FeatureReport, analyze
from .config import load_settings
from .core import Diagram, Series, default_steps, iterate
from .ingest import parse_csv
from .render import RenderSpec, render_raster

SeriesLike = Union[Series, Iterable[float]]


def _default_steps(n: int) -> int:
    return max(1, default_steps(n, load_settings().iteration.max_default_steps))


def build_diagram(values: SeriesLike, steps: Optional[int] = None) -> Diagram:
    """
    Smooth a series and collect its cellular diagram

    Args:
        values: Series or sequence of finite numbers
        steps: Number of smoothing steps (default min(N, 256), at least 1)

    Returns:
        Diagram

    Example:
        >>> diagram = build_diagram([0, 2, 0.5, 2, 0.5, 2, 0], steps=2)
        >>> print(diagram.masks.astype(int))
    """
    series = values if isinstance(values, Series) else Series(values)
    if steps is None:
        steps = _default_steps(len(series))
    return iterate(series, steps)


def analyze_series(
    values: SeriesLike, steps: Optional[int] = None, **options: Any
) -> FeatureReport:
    """
    Build the diagram of a series and extract its features

    Args:
        values: Series or sequence of finite numbers
        steps: Number of smoothing steps (default min(N, 256), at least 1)
        **options: Passed to analysis.analyze (window, threshold, measure, ...)

    Returns:
        FeatureReport with periods, instability intervals, convexity and
        stationary intervals

    Example:
        >>> report = analyze_series([5, 9, 9, 9, 9, 9, 4] * 20, steps=64)
        >>> print(report.periods[0].period)
        7
    """
    return analyze(build_diagram(values, steps), **options)


def render_series(
    values: SeriesLike,
    steps: Optional[int] = None,
    spec: Optional[RenderSpec] = None,
    output_path: Optional[Union[str, Path]] = None,
) -> bytes:
    """
    Render the diagram of a series

    Args:
        values: Series or sequence of finite numbers
        steps: Number of smoothing steps (default min(N, 256), at least 1)
        spec: Render options (default PBM, cell size 1)
        output_path: Optional file path to save the image

    Returns:
        Encoded image bytes

    Example:
        >>> data = render_series([0, 1, 0], steps=1, output_path="diagram.pbm")
    """
    data = render_raster(build_diagram(values, steps), spec or RenderSpec())
    if output_path is not None:
        Path(output_path).write_bytes(data)
    return data


def diagram_from_csv(
    path: Union[str, Path], column: int = 0, steps: Optional[int] = None
) -> Diagram:
    """
    Load one CSV column and build its diagram

    Args:
        path: CSV file path
        column: Zero-based column index
        steps: Number of smoothing steps (default min(N, 256), at least 1)

    Returns:
        Diagram
    """
    with open(path, "r", encoding="utf-8", newline="") as fh:
        series = parse_csv(fh, column)
    return build_diagram(series, steps)
