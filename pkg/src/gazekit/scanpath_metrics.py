"""Scanpath similarity measures.

Four measures over ordered fixation sequences:

* euclidean_distance -- mean pointwise distance, equal-length only
* string_edit_distance -- Levenshtein distance over grid-quantized tokens
* tde_distance -- sliding-window (time-delay embedding) distance, in pixels
* scaled_tde -- resolution-independent similarity in (0, 1]

All functions are pure and accept Scanpath objects (or anything exposing a
``positions`` (n, 2) array property).
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    KNonPositive,
    KTooLarge,
    LengthMismatch,
    ScanpathTooShort,
)


class TdeMode(Enum):
    """Aggregation of window-to-cloud minima: mean or maximum."""

    MEAN_MINIMAL = "mean"
    HAUSDORFF = "hausdorff"

    @classmethod
    def coerce(cls, mode):
        if isinstance(mode, cls):
            return mode
        key = str(mode).strip().lower()
        aliases = {
            "mean": cls.MEAN_MINIMAL,
            "mm": cls.MEAN_MINIMAL,
            "hausdorff": cls.HAUSDORFF,
            "h": cls.HAUSDORFF,
            "max": cls.HAUSDORFF,
        }
        if key not in aliases:
            raise ValueError(f"unknown tde mode {mode!r}")
        return aliases[key]


@dataclass(frozen=True)
class GridSpec:
    """n x n quantization grid over an image of size (l1 wide, l2 high)."""

    n: int
    l1: float
    l2: float

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.l1 <= 0 or self.l2 <= 0:
            raise ValueError("image dimensions must be positive")


def _positions(scanpath):
    pos = np.asarray(scanpath.positions, dtype=float)
    return pos.reshape(-1, 2)


def euclidean_distance(s, h, truncate=False):
    """Mean Euclidean distance between corresponding fixations.

    Strictly requires equal lengths; ``truncate=True`` trims both
    scanpaths to the shorter length instead of raising LengthMismatch.
    """
    ps, ph = _positions(s), _positions(h)
    if len(ps) != len(ph):
        if not truncate:
            raise LengthMismatch(
                f"scanpath lengths differ: {len(ps)} vs {len(ph)}"
            )
        n = min(len(ps), len(ph))
        ps, ph = ps[:n], ph[:n]
    return float(np.linalg.norm(ps - ph, axis=1).mean())


def quantize_to_tokens(s, grid):
    """Map each fixation to an integer region id on an n x n grid.

    Fixation (x, y) lands in column floor(x*n/l1), row floor(y*n/l2),
    clamped to the grid; the token is row*n + col. Out-of-bounds
    fixations clamp to the nearest border cell.
    """
    pos = _positions(s)
    n = grid.n
    col = np.floor(pos[:, 0] * n / grid.l1).astype(int)
    row = np.floor(pos[:, 1] * n / grid.l2).astype(int)
    col = np.clip(col, 0, n - 1)
    row = np.clip(row, 0, n - 1)
    return row * n + col


def token_edit_distance(a, b, substitution_cost=1):
    """Levenshtein distance between two token sequences.

    Insertions and deletions cost 1, substitutions cost
    ``substitution_cost``. Standard dynamic program, O(len(a)*len(b)).
    """
    a, b = list(a), list(b)
    la, lb = len(a), len(b)
    prev = [j * 1.0 for j in range(lb + 1)]
    for i in range(1, la + 1):
        cur = [float(i)] + [0.0] * lb
        ai = a[i - 1]
        for j in range(1, lb + 1):
            sub = prev[j - 1] + (0.0 if ai == b[j - 1] else substitution_cost)
            cur[j] = min(prev[j] + 1.0, cur[j - 1] + 1.0, sub)
        prev = cur
    d = prev[lb]
    return int(d) if d == int(d) else d


def string_edit_distance(s, h, stimulus_dims, n=5, substitution_cost=1):
    """Edit distance between the grid-quantized token strings of s and h.

    ``stimulus_dims`` is (width, height) in pixels; the image is divided
    into an n x n region grid shared by both scanpaths.
    """
    l1, l2 = stimulus_dims
    grid = GridSpec(n=n, l1=l1, l2=l2)
    ta = quantize_to_tokens(s, grid)
    tb = quantize_to_tokens(h, grid)
    return token_edit_distance(ta.tolist(), tb.tolist(), substitution_cost)


def _windows(pos, k):
    # windows of k consecutive fixations, start index t in 1..n-k
    # (n-k windows; the last fixation never starts a full window here)
    n = len(pos)
    return np.stack([pos[t : t + k] for t in range(n - k)])


def tde_distance(s, h, k=3, mode=TdeMode.MEAN_MINIMAL):
    """Time-delay embedding distance between two scanpaths, in pixels.

    Both scanpaths are decomposed into all length-k sliding windows of
    consecutive fixations; each window of s is matched to its closest
    window of h (window-to-window distance = mean of pointwise Euclidean
    distances over the k aligned positions). The per-window minima are
    aggregated by mean (MEAN_MINIMAL) or max (HAUSDORFF).

    Not symmetric: s's windows are matched against h's, not vice versa.
    Requires 1 <= k < min(len(s), len(h)).
    """
    mode = TdeMode.coerce(mode)
    ps, ph = _positions(s), _positions(h)
    if k < 1:
        raise KNonPositive(f"k must be >= 1, got {k}")
    if k >= min(len(ps), len(ph)):
        raise KTooLarge(
            f"k={k} must be < min scanpath length {min(len(ps), len(ph))}"
        )
    X = _windows(ps, k)  # (nx, k, 2)
    Y = _windows(ph, k)  # (ny, k, 2)
    # pairwise window distance: mean over k aligned pointwise distances
    diff = X[:, None, :, :] - Y[None, :, :, :]
    pair = np.linalg.norm(diff, axis=3).mean(axis=2)  # (nx, ny)
    minima = pair.min(axis=1)
    if mode is TdeMode.MEAN_MINIMAL:
        return float(minima.mean())
    return float(minima.max())


@dataclass(frozen=True)
class _RawPath:
    positions: np.ndarray


def scaled_tde(s, h, stimulus_dims):
    """Scaled time-delay embedding similarity, in (0, 1].

    Coordinates are normalized by L = max(width, height), the mean-minimal
    tde is averaged over every valid window length k, and the result is
    exp(-mean). 1.0 means identical scanpaths; values decay towards 0
    with dissimilarity. Requires both scanpaths to have >= 2 fixations.
    """
    l1, l2 = stimulus_dims
    L = float(max(l1, l2))
    ps, ph = _positions(s) / L, _positions(h) / L
    n_min = min(len(ps), len(ph))
    if n_min < 2:
        raise ScanpathTooShort(
            "scaled tde needs at least 2 fixations in each scanpath"
        )
    ks = range(1, n_min)
    sn, hn = _RawPath(ps), _RawPath(ph)
    total = sum(tde_distance(sn, hn, k=k, mode=TdeMode.MEAN_MINIMAL) for k in ks)
    return float(np.exp(-total / len(ks)))
