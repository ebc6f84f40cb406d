"""Core domain types: fixations, scanpaths, grids, images.

Coordinate convention: x is the column (horizontal) pixel coordinate and
y is the row (vertical) pixel coordinate. Both are real-valued, since eye
trackers report sub-pixel estimates; quantization happens only where a
consumer demands it (token grids, map lookups). A fixation (x, y) addresses
grid cell (row=floor(y), col=floor(x)), clamped to the grid bounds.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    EmptyScanpath,
    MalformedRow,
    NonMonotonicTime,
)


@dataclass(frozen=True)
class Fixation:
    """One fixated location with its time interval (seconds).

    Overlapping intervals between consecutive fixations are allowed;
    only t_end >= t_start is enforced per fixation.
    """

    x: float
    y: float
    t_start: float
    t_end: float

    def __post_init__(self):
        for name in ("x", "y", "t_start", "t_end"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
        if self.t_end < self.t_start:
            raise ValueError(
                f"t_end ({self.t_end}) must be >= t_start ({self.t_start})"
            )

    @property
    def duration(self):
        return self.t_end - self.t_start

    @property
    def position(self):
        return np.array([self.x, self.y])


@dataclass(frozen=True)
class Scanpath:
    """Temporally ordered fixation sequence of one subject on one stimulus."""

    fixations: tuple
    subject_id: str = ""
    stimulus_ref: str = ""

    def __post_init__(self):
        object.__setattr__(self, "fixations", tuple(self.fixations))
        if not self.fixations:
            raise EmptyScanpath("a scanpath needs at least one fixation")
        starts = [f.t_start for f in self.fixations]
        for i in range(1, len(starts)):
            if starts[i] < starts[i - 1]:
                raise NonMonotonicTime(
                    i, f"t_start decreases: {starts[i]} < {starts[i - 1]}"
                )

    def __len__(self):
        return len(self.fixations)

    def __iter__(self):
        return iter(self.fixations)

    @property
    def positions(self):
        """(n, 2) array of (x, y) positions in fixation order."""
        return np.array([[f.x, f.y] for f in self.fixations], dtype=float)

    @property
    def duration(self):
        """Recorded span: last t_end minus first t_start."""
        return self.fixations[-1].t_end - self.fixations[0].t_start


def scanpath_from_rows(rows, subject_id="", stimulus_ref=""):
    """Build a Scanpath from numeric rows [x, y, t_start, t_end].

    Row order is preserved. Raises EmptyScanpath, MalformedRow or
    NonMonotonicTime (all carrying the offending row index).
    """
    rows = list(rows)
    if not rows:
        raise EmptyScanpath("no fixation rows")
    fixations = []
    prev_start = None
    for i, row in enumerate(rows):
        values = list(row)
        if len(values) != 4:
            raise MalformedRow(i, f"expected 4 values, got {len(values)}")
        try:
            x, y, t0, t1 = (float(v) for v in values)
        except (TypeError, ValueError) as exc:
            raise MalformedRow(i, f"non-numeric value: {exc}") from None
        if not all(math.isfinite(v) for v in (x, y, t0, t1)):
            raise MalformedRow(i, "non-finite value")
        if t1 < t0:
            raise NonMonotonicTime(i, f"t_end {t1} < t_start {t0}")
        if prev_start is not None and t0 < prev_start:
            raise NonMonotonicTime(i, f"t_start decreases: {t0} < {prev_start}")
        prev_start = t0
        fixations.append(Fixation(x, y, t0, t1))
    return Scanpath(tuple(fixations), subject_id, stimulus_ref)


@dataclass(frozen=True)
class FixationMap:
    """Binary grid: 1 at fixated pixels, 0 elsewhere."""

    grid: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.grid)
        if g.ndim != 2:
            raise ValueError(f"fixation map must be 2-D, got ndim={g.ndim}")
        if not np.isin(g, (0, 1)).all():
            raise ValueError("fixation map cells must be exactly 0 or 1")
        g = g.astype(np.uint8)
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    @property
    def shape(self):
        return self.grid.shape

    @property
    def n_fixated(self):
        return int(self.grid.sum())


@dataclass(frozen=True)
class SaliencyMap:
    """Continuous non-negative grid, normalized so max <= 1."""

    grid: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.grid, dtype=float)
        if g.ndim != 2:
            raise ValueError(f"saliency map must be 2-D, got ndim={g.ndim}")
        if not np.isfinite(g).all():
            raise ValueError("saliency map values must be finite")
        if (g < 0).any():
            raise ValueError("saliency map values must be >= 0")
        g.setflags(write=False)
        object.__setattr__(self, "grid", g)

    @property
    def shape(self):
        return self.grid.shape


@dataclass(frozen=True)
class StimulusImage:
    """Decoded stimulus: grayscale (h, w) or color (h, w, c) pixel array."""

    pixels: np.ndarray = field(repr=False)

    def __post_init__(self):
        p = np.asarray(self.pixels)
        if p.ndim not in (2, 3):
            raise ValueError(f"pixels must be 2-D or 3-D, got ndim={p.ndim}")
        if p.shape[0] < 1 or p.shape[1] < 1:
            raise ValueError("image must be at least 1x1")
        p.setflags(write=False)
        object.__setattr__(self, "pixels", p)

    @property
    def height(self):
        return self.pixels.shape[0]

    @property
    def width(self):
        return self.pixels.shape[1]

    @property
    def dims(self):
        """(width, height) tuple, i.e. the horizontal and vertical extents."""
        return (self.width, self.height)
