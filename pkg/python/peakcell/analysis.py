"""
Feature extraction from a cellular diagram

Reads off, numerically, what the diagram shows by eye: vertical stripes that
repeat (periodic components), dense or jagged regions in the early rows
(instability), long never-changing stretches (stationary regions) and the
solid band of a concave series.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Union

import numpy as np

from .core import Diagram
from .errors import InvalidArgumentError

logger = logging.getLogger(__name__)

MIN_PERIOD_SERIES_LENGTH = 8
DEFAULT_MAX_CANDIDATES = 5
DEFAULT_ACF_FLOOR = 0.2
DEFAULT_HARMONIC_TOLERANCE = 1
DEFAULT_WINDOW = 16
DEFAULT_THRESHOLD = 0.5
DEFAULT_INSTABILITY_ROWS = 32
DEFAULT_STATIONARY_MIN_LENGTH = 16


class Convexity(str, Enum):
    FIXED_POINT = "FIXED_POINT"
    STRICTLY_CONCAVE_INTERIOR = "STRICTLY_CONCAVE_INTERIOR"
    MIXED = "MIXED"


class InstabilityMeasure(str, Enum):
    """What a window counts when scoring instability"""

    BLACK = "black"
    ALTERNATION = "alternation"


@dataclass(frozen=True, eq=False)
class DepthProfile:
    depths: np.ndarray

    def __len__(self) -> int:
        return len(self.depths)

    def tolist(self) -> List[int]:
        return [int(d) for d in self.depths]


@dataclass(frozen=True)
class PeriodEstimate:
    period: int
    strength: float


@dataclass(frozen=True)
class InstabilityInterval:
    start: int
    end: int
    score: float


@dataclass(frozen=True)
class StationaryInterval:
    start: int
    end: int


@dataclass(frozen=True)
class FeatureReport:
    n: int
    steps: int
    periods: List[PeriodEstimate] = field(default_factory=list)
    instabilities: List[InstabilityInterval] = field(default_factory=list)
    convexity: Convexity = Convexity.MIXED
    stationary: List[StationaryInterval] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Plain-data form used for the JSON report"""
        return {
            "n": self.n,
            "steps": self.steps,
            "periods": [{"period": p.period, "strength": p.strength} for p in self.periods],
            "instabilities": [
                {"start": i.start, "end": i.end, "score": i.score} for i in self.instabilities
            ],
            "convexity": self.convexity.value,
            "stationary": [{"start": s.start, "end": s.end} for s in self.stationary],
        }


def _require_steps(diagram: Diagram) -> None:
    if diagram.steps < 1:
        raise InvalidArgumentError("diagram has no steps (K = 0)")


def _runs(flags: np.ndarray) -> List[tuple]:
    """(start, end) inclusive for every maximal run of True"""
    padded = np.concatenate(([False], flags, [False])).astype(np.int8)
    edges = np.diff(padded)
    starts = np.flatnonzero(edges == 1)
    ends = np.flatnonzero(edges == -1) - 1
    return list(zip(starts.tolist(), ends.tolist()))


def depth_profile(diagram: Diagram) -> DepthProfile:
    """Number of black cells in every column of the diagram"""
    _require_steps(diagram)
    depths = diagram.masks.sum(axis=0, dtype=np.int64)
    return DepthProfile(depths=depths)


def autocorrelation(profile: Union[DepthProfile, np.ndarray], max_lag: int) -> np.ndarray:
    """
    Normalized autocorrelation of a mean-removed profile for lags 0..max_lag

    Uses the biased estimator sum(d[t] * d[t + lag]) / sum(d * d), so every
    value lies in [-1, 1]. A zero-variance profile gives all zeros.
    """
    depths = profile.depths if isinstance(profile, DepthProfile) else np.asarray(profile)
    d = depths.astype(np.float64)
    d = d - d.mean()
    n = len(d)
    max_lag = min(max_lag, n - 1)
    energy = float(np.dot(d, d))
    if n == 0 or energy == 0.0:
        return np.zeros(max(max_lag + 1, 0))
    full = np.correlate(d, d, mode="full")
    return full[n - 1 : n + max_lag] / energy


def estimate_periods(
    diagram: Diagram,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
    floor: float = DEFAULT_ACF_FLOOR,
    harmonic_tolerance: int = DEFAULT_HARMONIC_TOLERANCE,
) -> List[PeriodEstimate]:
    """
    Estimate periodic components from the depth profile

    Local maxima of the profile autocorrelation with lag in [2, N/2] and
    height at least `floor` are candidates. Candidates are taken by
    descending strength; one lying within `harmonic_tolerance` samples of a
    multiple of an accepted period is dropped.

    Args:
        diagram: Diagram with K >= 1 and N >= 8
        max_candidates: Maximum number of estimates returned
        floor: Minimum autocorrelation height
        harmonic_tolerance: Harmonic suppression slack in samples

    Returns:
        Estimates sorted by descending strength, possibly empty
    """
    _require_steps(diagram)
    n = diagram.n
    if n < MIN_PERIOD_SERIES_LENGTH:
        raise InvalidArgumentError(
            f"series too short for period estimation: N = {n} < {MIN_PERIOD_SERIES_LENGTH}"
        )
    if max_candidates < 1:
        raise InvalidArgumentError(f"max_candidates must be positive, got {max_candidates}")

    half = n // 2
    acf = autocorrelation(depth_profile(diagram), half + 1)
    lags = np.arange(2, half + 1)
    here = acf[lags]
    is_peak = (here > acf[lags - 1]) & (here >= acf[lags + 1]) & (here >= floor)
    candidates = lags[is_peak]
    # strongest first, shorter lag first on ties
    order = np.lexsort((candidates, -acf[candidates]))

    accepted: List[PeriodEstimate] = []
    for lag in candidates[order].tolist():
        if len(accepted) >= max_candidates:
            break
        harmonic = False
        for estimate in accepted:
            multiple = round(lag / estimate.period)
            if multiple >= 1 and abs(lag - multiple * estimate.period) <= harmonic_tolerance:
                harmonic = True
                break
        if not harmonic:
            strength = float(min(1.0, max(0.0, acf[lag])))
            accepted.append(PeriodEstimate(period=int(lag), strength=strength))

    logger.debug("Period candidates %s, accepted %s", candidates.tolist(), accepted)
    return accepted


def _window_density(counts: np.ndarray, window: int, cells_per_column: int) -> np.ndarray:
    cumulative = np.concatenate(([0], np.cumsum(counts, dtype=np.int64)))
    sums = cumulative[window:] - cumulative[:-window]
    return sums / float(window * cells_per_column)


def detect_instability(
    diagram: Diagram,
    window: int = DEFAULT_WINDOW,
    threshold: float = DEFAULT_THRESHOLD,
    measure: Union[InstabilityMeasure, str] = InstabilityMeasure.BLACK,
    rows: int = DEFAULT_INSTABILITY_ROWS,
) -> List[InstabilityInterval]:
    """
    Locate column ranges with dense activity in the early mask rows

    Only the first R = min(K, rows) rows are read. With the BLACK measure a
    window scores the black fraction of its window x R rectangle. With the
    ALTERNATION measure it scores the fraction of vertical colour flips
    between consecutive rows, which picks up checkerboard structures and
    ignores solid bands. Flagged windows (score >= threshold) that overlap
    or touch are merged; an interval's score is its best window.

    Args:
        diagram: Diagram with K >= 1
        window: Window width in columns, 1 <= window <= N
        threshold: Flagging threshold in (0, 1]
        measure: "black" or "alternation"
        rows: How many early rows to read

    Returns:
        Disjoint intervals sorted by start
    """
    _require_steps(diagram)
    n = diagram.n
    if window < 1 or window > n:
        raise InvalidArgumentError(f"window must be in 1..{n}, got {window}")
    if not 0.0 < threshold <= 1.0:
        raise InvalidArgumentError(f"threshold must be in (0, 1], got {threshold}")
    if rows < 1:
        raise InvalidArgumentError(f"rows must be positive, got {rows}")
    try:
        measure = InstabilityMeasure(measure)
    except ValueError:
        raise InvalidArgumentError(f"unknown instability measure {measure!r}") from None

    r = min(diagram.steps, rows)
    early = diagram.masks[:r]
    if measure is InstabilityMeasure.BLACK:
        counts = early.sum(axis=0)
        cells = r
    else:
        if r < 2:
            return []
        counts = (early[:-1] != early[1:]).sum(axis=0)
        cells = r - 1

    density = _window_density(counts, window, cells)
    intervals: List[InstabilityInterval] = []
    for start in np.flatnonzero(density >= threshold).tolist():
        end = start + window - 1
        score = float(density[start])
        if intervals and start <= intervals[-1].end + 1:
            last = intervals[-1]
            intervals[-1] = InstabilityInterval(last.start, end, max(last.score, score))
        else:
            intervals.append(InstabilityInterval(start, end, score))

    logger.debug("Instability (%s, window=%d, rows=%d): %s", measure.value, window, r, intervals)
    return intervals


def detect_stationary(
    diagram: Diagram, min_length: int = DEFAULT_STATIONARY_MIN_LENGTH
) -> List[StationaryInterval]:
    """Maximal runs of at least min_length columns that never turn black"""
    if min_length < 1:
        raise InvalidArgumentError(f"min_length must be positive, got {min_length}")
    depths = depth_profile(diagram).depths
    return [
        StationaryInterval(start, end)
        for start, end in _runs(depths == 0)
        if end - start + 1 >= min_length
    ]


def classify_convexity(diagram: Diagram) -> Convexity:
    """
    FIXED_POINT when nothing ever changes, STRICTLY_CONCAVE_INTERIOR when the
    whole interior of the first row is black, MIXED otherwise
    """
    _require_steps(diagram)
    masks = diagram.masks
    if not masks.any():
        return Convexity.FIXED_POINT
    if masks[0, 1:-1].all():
        return Convexity.STRICTLY_CONCAVE_INTERIOR
    return Convexity.MIXED


def analyze(
    diagram: Diagram,
    max_periods: int = DEFAULT_MAX_CANDIDATES,
    floor: float = DEFAULT_ACF_FLOOR,
    harmonic_tolerance: int = DEFAULT_HARMONIC_TOLERANCE,
    window: int = DEFAULT_WINDOW,
    threshold: float = DEFAULT_THRESHOLD,
    measure: Union[InstabilityMeasure, str] = InstabilityMeasure.BLACK,
    rows: int = DEFAULT_INSTABILITY_ROWS,
    stationary_min_length: int = DEFAULT_STATIONARY_MIN_LENGTH,
) -> FeatureReport:
    """
    Run every detector and collect the results

    Period estimation is skipped (empty list) for series shorter than 8
    samples, and instability detection uses min(window, N) so short series
    still produce a report.
    """
    _require_steps(diagram)
    n = diagram.n
    periods: List[PeriodEstimate] = []
    if n >= MIN_PERIOD_SERIES_LENGTH:
        periods = estimate_periods(diagram, max_periods, floor, harmonic_tolerance)
    instabilities: List[InstabilityInterval] = []
    if n >= 1:
        instabilities = detect_instability(diagram, min(window, n), threshold, measure, rows)
    report = FeatureReport(
        n=n,
        steps=diagram.steps,
        periods=periods,
        instabilities=instabilities,
        convexity=classify_convexity(diagram),
        stationary=detect_stationary(diagram, stationary_min_length),
    )
    logger.info(
        "Analyzed N=%d K=%d: %d periods, %d instability intervals, %s",
        n,
        diagram.steps,
        len(periods),
        len(instabilities),
        report.convexity.value,
    )
    return report
