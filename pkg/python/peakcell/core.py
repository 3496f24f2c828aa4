"""
Peak-smoothing operator and cellular diagram construction

A series X_0 is smoothed step by step: every interior value strictly above
the average of its two neighbours is replaced by that average, every other
value is copied. The cell of step k is black when the value was replaced and
white when it was copied. Stacking the K mask rows gives the diagram.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

import numpy as np

from .errors import InvalidArgumentError, InvalidInputError

logger = logging.getLogger(__name__)

ArrayLike = Union[Iterable[float], np.ndarray]


def _frozen(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


def _as_finite_array(values: ArrayLike) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    if array.ndim != 1:
        raise InvalidInputError(f"series must be one-dimensional, got shape {array.shape}")
    if not np.all(np.isfinite(array)):
        bad = int(np.flatnonzero(~np.isfinite(array))[0])
        raise InvalidInputError(f"non-finite value {array[bad]!r} at index {bad}")
    return array


class Series:
    """A finite, immutable sequence of measurements (X_0)"""

    __slots__ = ("_values",)

    def __init__(self, values: ArrayLike):
        if isinstance(values, Series):
            values = values.values
        self._values = _frozen(_as_finite_array(values))

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values.tolist())

    def __getitem__(self, index):
        return self.values[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return bool(np.array_equal(self.values, other.values))

    def __repr__(self) -> str:
        return f"Series(n={len(self)})"


@dataclass(frozen=True, eq=False)
class StepResult:
    """One smoothed layer X_k and the colour of each of its cells"""

    values: np.ndarray
    mask: np.ndarray
    step_index: int

    def __repr__(self) -> str:
        black = int(self.mask.sum())
        return f"StepResult(step={self.step_index}, n={len(self.values)}, black={black})"


@dataclass(frozen=True, eq=False)
class Diagram:
    """
    The full stack of smoothed layers and mask rows

    layers has shape (K, N) and holds X_1..X_K; masks has the same shape,
    True meaning black. Row 0 of both belongs to step 1.
    """

    source: Series
    layers: np.ndarray
    masks: np.ndarray

    @property
    def steps(self) -> int:
        return int(self.masks.shape[0])

    @property
    def n(self) -> int:
        return len(self.source)

    def layer(self, k: int) -> np.ndarray:
        """Layer X_k, with k = 0 meaning the source"""
        if k == 0:
            return self.source.values
        if not 1 <= k <= self.steps:
            raise InvalidArgumentError(f"layer index {k} outside 0..{self.steps}")
        return self.layers[k - 1]

    def __repr__(self) -> str:
        return f"Diagram(n={self.n}, steps={self.steps})"


def _smooth(previous: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # all reads come from `previous`; endpoints are copied and stay white
    values = previous.copy()
    mask = np.zeros(previous.shape, dtype=bool)
    if previous.size < 3:
        return values, mask
    left, right = previous[:-2], previous[2:]
    with np.errstate(over="ignore"):
        average = (left + right) / 2
    # near the float limits the sum overflows; halving first is exact there
    overflow = ~np.isfinite(average)
    if overflow.any():
        average[overflow] = left[overflow] / 2 + right[overflow] / 2
    fired = previous[1:-1] > average
    values[1:-1] = np.where(fired, average, previous[1:-1])
    mask[1:-1] = fired
    return values, mask


def smooth_step(previous: ArrayLike, step_index: int = 1) -> StepResult:
    """
    Apply the peak-smoothing operator once

    Args:
        previous: Layer X_{k-1}
        step_index: k, recorded on the result

    Returns:
        StepResult with layer X_k and its mask (True = black = replaced)

    Example:
        >>> smooth_step([0, 1, 0]).mask.tolist()
        [False, True, False]
    """
    if step_index < 1:
        raise InvalidArgumentError(f"step_index must be positive, got {step_index}")
    values, mask = _smooth(_as_finite_array(previous))
    return StepResult(values=_frozen(values), mask=_frozen(mask), step_index=step_index)


def iterate(source: Union[Series, ArrayLike], steps: int) -> Diagram:
    """
    Run the smoothing operator for a preset number of steps

    All K steps are always run; rows after the series reaches a fixed point
    are stored as all-white rows.

    Args:
        source: X_0
        steps: K, the number of smoothing steps (K >= 0)

    Returns:
        Diagram holding K layers and K mask rows
    """
    if not isinstance(source, Series):
        source = Series(source)
    if isinstance(steps, bool) or not isinstance(steps, (int, np.integer)) or steps < 0:
        raise InvalidArgumentError(f"steps must be a non-negative integer, got {steps!r}")
    steps = int(steps)

    n = len(source)
    layers = np.empty((steps, n), dtype=np.float64)
    masks = np.zeros((steps, n), dtype=bool)
    current = source.values
    for k in range(steps):
        layers[k], masks[k] = _smooth(current)
        current = layers[k]

    logger.debug(
        "Iterated %d steps over %d values, %d black cells", steps, n, int(masks.sum())
    )
    return Diagram(source=source, layers=_frozen(layers), masks=_frozen(masks))


def is_fixed_point(series: Union[Series, ArrayLike]) -> bool:
    """True when one smoothing step would leave every value unchanged"""
    values = series.values if isinstance(series, Series) else _as_finite_array(series)
    _, mask = _smooth(values)
    return not bool(mask.any())


def default_steps(n: int, cap: int = 256) -> int:
    """Default step count min(N, cap) used when none is given"""
    return min(n, cap)
