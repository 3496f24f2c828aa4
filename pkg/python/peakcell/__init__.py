"""
PeakCell - cellular diagrams of a series of measurements

The series is smoothed by repeatedly cutting its peaks down to the average of
their neighbours; every step becomes one row of black (changed) and white
(unchanged) cells. The resulting diagram shows periodic components, jagged
or unstable regions and convex stretches at a glance, and this package also
reads those features off numerically.
"""

__version__ = "0.1.0"

from .errors import (
    PeakCellError,
    InvalidInputError,
    InvalidArgumentError,
    UnsupportedFormatError,
    ConfigError,
    ParseError,
    EmptyInputError,
)

from .config import (
    Settings,
    LoggingSettings,
    load_settings,
)

from .core import (
    Series,
    StepResult,
    Diagram,
    smooth_step,
    iterate,
    is_fixed_point,
)

from .analysis import (
    Convexity,
    InstabilityMeasure,
    DepthProfile,
    PeriodEstimate,
    InstabilityInterval,
    StationaryInterval,
    FeatureReport,
    depth_profile,
    estimate_periods,
    detect_instability,
    detect_stationary,
    classify_convexity,
    analyze,
)

from .render import (
    RenderFormat,
    RenderSpec,
    render_raster,
    render_ascii,
)

from .ingest import (
    SyntheticKind,
    SyntheticSpec,
    parse_csv,
    generate,
    export_mask_csv,
    format_series_csv,
)

# High-level API
from .api import (
    build_diagram,
    analyze_series,
    render_series,
    diagram_from_csv,
)

__all__ = [
    # Errors
    "PeakCellError",
    "InvalidInputError",
    "InvalidArgumentError",
    "UnsupportedFormatError",
    "ConfigError",
    "ParseError",
    "EmptyInputError",

    # Configuration
    "Settings",
    "LoggingSettings",
    "load_settings",

    # Core
    "Series",
    "StepResult",
    "Diagram",
    "smooth_step",
    "iterate",
    "is_fixed_point",

    # Analysis
    "Convexity",
    "InstabilityMeasure",
    "DepthProfile",
    "PeriodEstimate",
    "InstabilityInterval",
    "StationaryInterval",
    "FeatureReport",
    "depth_profile",
    "estimate_periods",
    "detect_instability",
    "detect_stationary",
    "classify_convexity",
    "analyze",

    # Rendering
    "RenderFormat",
    "RenderSpec",
    "render_raster",
    "render_ascii",

    # Ingest
    "SyntheticKind",
    "SyntheticSpec",
    "parse_csv",
    "generate",
    "export_mask_csv",
    "format_series_csv",

    # High-level API
    "build_diagram",
    "analyze_series",
    "render_series",
    "diagram_from_csv",

    # Version
    "__version__",
]
