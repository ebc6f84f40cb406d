"""Saliency map generation and collection statistics."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import convolve1d

from .errors import (
    EmptyFixationMap,
    NoData,
    NonPositiveInput,
    NonPositiveSigma,
)
from .types import FixationMap, SaliencyMap


def pixels_per_degree(screen_px_w, screen_cm_w, distance_cm):
    """Pixels subtended by one degree of visual angle.

    Computed from the horizontal screen resolution, physical screen
    width and eye-screen distance: (px/cm) * 2 * d * tan(0.5 deg).
    """
    if screen_px_w <= 0 or screen_cm_w <= 0 or distance_cm <= 0:
        raise NonPositiveInput("all physical parameters must be > 0")
    cm_per_degree = 2.0 * distance_cm * math.tan(math.radians(0.5))
    return (screen_px_w / screen_cm_w) * cm_per_degree


def _gaussian_kernel(sigma):
    # truncated at 3 sigma, renormalized to unit sum (< 0.3% mass lost
    # before renormalization)
    radius = int(math.ceil(3.0 * sigma))
    x = np.arange(-radius, radius + 1, dtype=float)
    k = np.exp(-0.5 * (x / sigma) ** 2)
    return k / k.sum()


def blur_fixation_map(fixmap, sigma_px):
    """Gaussian-blur a binary fixation map; no rescaling applied.

    Separable convolution with a kernel truncated at 3 sigma and
    renormalized; reflective boundary handling. Linear in the input map.
    """
    if sigma_px <= 0:
        raise NonPositiveSigma(f"sigma must be > 0, got {sigma_px}")
    grid = np.asarray(fixmap.grid if isinstance(fixmap, FixationMap) else fixmap,
                      dtype=float)
    kernel = _gaussian_kernel(sigma_px)
    out = convolve1d(grid, kernel, axis=0, mode="reflect")
    out = convolve1d(out, kernel, axis=1, mode="reflect")
    return out


def saliency_from_fixations(fixmap, sigma_px):
    """Saliency map from a fixation map: Gaussian blur, rescaled to max 1."""
    grid = np.asarray(fixmap.grid if isinstance(fixmap, FixationMap) else fixmap)
    if not (grid > 0).any():
        raise EmptyFixationMap("fixation map has no fixated cells")
    out = blur_fixation_map(grid, sigma_px)
    return SaliencyMap(out / out.max())


@dataclass(frozen=True)
class CollectionStats:
    """Aggregate scanpath statistics over a dataset or whole collection."""

    fixations_per_second: float
    avg_saccade_length: float
    n_scanpaths: int
    n_fixations: int


def stats_from_scanpaths(scanpaths):
    """CollectionStats over an iterable of Scanpath objects.

    Fixation rate divides the total fixation count by the summed
    recorded spans (last t_end - first t_start per scanpath). Saccade
    length averages over all consecutive fixation pairs; single-fixation
    scanpaths contribute no saccades.
    """
    n_scanpaths = 0
    n_fixations = 0
    total_time = 0.0
    saccade_total = 0.0
    saccade_count = 0
    for sp in scanpaths:
        n_scanpaths += 1
        n_fixations += len(sp)
        total_time += sp.duration
        pos = sp.positions
        if len(pos) >= 2:
            steps = np.linalg.norm(np.diff(pos, axis=0), axis=1)
            saccade_total += float(steps.sum())
            saccade_count += len(steps)
    if n_scanpaths == 0:
        raise NoData("no scanpaths in scope")
    rate = n_fixations / total_time if total_time > 0 else 0.0
    avg_saccade = saccade_total / saccade_count if saccade_count else 0.0
    return CollectionStats(
        fixations_per_second=rate,
        avg_saccade_length=avg_saccade,
        n_scanpaths=n_scanpaths,
        n_fixations=n_fixations,
    )


def compute_statistics(catalog, dataset_name=None):
    """CollectionStats over one dataset, or the whole catalog when None."""
    from .dataset import iter_scanpaths  # local import to avoid a cycle

    return stats_from_scanpaths(iter_scanpaths(catalog, dataset_name))
