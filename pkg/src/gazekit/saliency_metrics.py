"""Saliency map evaluation: KL divergence, AUC-Judd, NSS."""

from dataclasses import dataclass

import numpy as np

from .errors import (
    AllZeroMap,
    ConstantMapWithoutJitter,
    DimensionMismatch,
    NoFixations,
    ZeroVariance,
)
from .types import FixationMap, SaliencyMap

_EPS = float(np.finfo(float).eps)


@dataclass(frozen=True)
class AucParams:
    """Tie-breaking jitter configuration for AUC-Judd.

    The jitter is seed-deterministic so batch evaluations are
    reproducible bit-for-bit.
    """

    jitter: bool = True
    jitter_scale: float = 1e-7
    seed: int = 0

    def __post_init__(self):
        if self.jitter_scale <= 0:
            raise ValueError("jitter_scale must be > 0")


def _grid(m):
    if isinstance(m, (SaliencyMap, FixationMap)):
        return np.asarray(m.grid, dtype=float)
    return np.asarray(m, dtype=float)


def kl_divergence(p, q, epsilon=_EPS):
    """Kullback-Leibler divergence D(p || q) between two saliency maps.

    Both maps are normalized to probability distributions first; epsilon
    regularizes empty cells. Result is in nats, >= 0 up to
    epsilon-induced error. Not symmetric.
    """
    pg, qg = _grid(p), _grid(q)
    if pg.shape != qg.shape:
        raise DimensionMismatch(f"map shapes differ: {pg.shape} vs {qg.shape}")
    ps, qs = pg.sum(), qg.sum()
    if ps <= 0:
        raise AllZeroMap("first map has no positive values")
    if qs <= 0:
        raise AllZeroMap("second map has no positive values")
    pn, qn = pg / ps, qg / qs
    return float(np.sum(pn * np.log((pn + epsilon) / (qn + epsilon))))


def auc_judd(saliency, fixations, params=AucParams()):
    """Area under the ROC curve, thresholds at fixated saliency values.

    The saliency map is (optionally) jittered with tiny seed-deterministic
    uniform noise to break ties, then min-max normalized. Each distinct
    saliency value at a fixated pixel serves as a threshold; the true
    positive rate is the fraction of fixated pixels at or above it, the
    false positive rate the fraction of all remaining pixels at or above
    it. The curve is anchored at (0,0) and (1,1) and integrated with the
    trapezoidal rule.
    """
    sal = _grid(saliency)
    fix = _grid(fixations)
    if sal.shape != fix.shape:
        raise DimensionMismatch(f"map shapes differ: {sal.shape} vs {fix.shape}")
    fixated = fix > 0
    n_fix = int(fixated.sum())
    if n_fix == 0:
        raise NoFixations("fixation map has no fixated pixels")
    if params.jitter:
        rng = np.random.default_rng(params.seed)
        sal = sal + rng.uniform(0.0, params.jitter_scale, size=sal.shape)
    if sal.max() == sal.min():
        raise ConstantMapWithoutJitter(
            "constant saliency map and jitter disabled: AUC undefined"
        )
    sal = (sal - sal.min()) / (sal.max() - sal.min())

    at_fix = sal[fixated]
    rest = sal[~fixated]
    n_rest = rest.size

    # descending distinct thresholds, one per fixated saliency value; the
    # curve is the true ROC staircase (horizontal corner inserted before
    # each vertical rise), so trapezoidal integration recovers the exact
    # ranking area rather than cutting corners between sparse thresholds
    thresholds = np.unique(at_fix)[::-1]
    tpr = [0.0]
    fpr = [0.0]
    for thresh in thresholds:
        t = float(np.count_nonzero(at_fix >= thresh)) / n_fix
        f = float(np.count_nonzero(rest >= thresh)) / n_rest if n_rest else 0.0
        tpr.extend([tpr[-1], t])
        fpr.extend([f, f])
    tpr.extend([tpr[-1], 1.0])
    fpr.extend([1.0, 1.0])
    return float(np.trapezoid(tpr, fpr))


def nss(saliency, fixations):
    """Normalized scanpath saliency.

    The saliency map is standardized to zero mean and unit population
    standard deviation over all pixels; the score is the mean
    standardized value over fixated pixels. Exactly invariant under
    positive affine transforms of the saliency map.
    """
    sal = _grid(saliency)
    fix = _grid(fixations)
    if sal.shape != fix.shape:
        raise DimensionMismatch(f"map shapes differ: {sal.shape} vs {fix.shape}")
    fixated = fix > 0
    if not fixated.any():
        raise NoFixations("fixation map has no fixated pixels")
    std = sal.std()
    if std == 0:
        raise ZeroVariance("constant saliency map: NSS undefined")
    z = (sal - sal.mean()) / std
    return float(z[fixated].mean())
