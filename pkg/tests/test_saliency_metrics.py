import numpy as np
import pytest

from oracles import pairwise_auc

from gazekit.errors import (
    AllZeroMap,
    ConstantMapWithoutJitter,
    DimensionMismatch,
    NoFixations,
    ZeroVariance,
)
from gazekit.saliency_metrics import AucParams, auc_judd, kl_divergence, nss
from gazekit.types import FixationMap, SaliencyMap

EPS = float(np.finfo(float).eps)


def random_instance(rng, shape=(5, 5), n_fix=None):
    sal = rng.random(shape)
    total = shape[0] * shape[1]
    if n_fix is None:
        n_fix = int(rng.integers(1, total))
    fix = np.zeros(total, dtype=int)
    fix[rng.choice(total, size=n_fix, replace=False)] = 1
    return sal, fix.reshape(shape)


# --- KL divergence ---

def test_kl_self_zero():
    rng = np.random.default_rng(0)
    for _ in range(20):
        p = rng.random((6, 7))
        assert abs(kl_divergence(p, p)) < 1e-9


def test_kl_concentrated_mass():
    p = np.full((2, 2), 0.25)
    q = np.zeros((2, 2))
    q[0, 0] = 1.0
    # direct scalar evaluation of the formula with the fixed epsilon
    expected = 0.25 * np.log((0.25 + EPS) / (1.0 + EPS)) + 3 * (
        0.25 * np.log((0.25 + EPS) / EPS)
    )
    assert kl_divergence(p, q) == pytest.approx(expected, rel=1e-12)


def test_kl_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        kl_divergence(np.ones((2, 2)), np.ones((2, 3)))


def test_kl_all_zero():
    with pytest.raises(AllZeroMap):
        kl_divergence(np.zeros((2, 2)), np.ones((2, 2)))
    with pytest.raises(AllZeroMap):
        kl_divergence(np.ones((2, 2)), np.zeros((2, 2)))


def test_kl_nonnegative_and_asymmetric():
    rng = np.random.default_rng(1)
    asym = 0
    for _ in range(50):
        p, q = rng.random((4, 4)), rng.random((4, 4))
        assert kl_divergence(p, q) >= -1e-9
        asym += kl_divergence(p, q) != kl_divergence(q, p)
    assert asym > 0


def test_kl_accepts_saliency_map_objects():
    p = SaliencyMap(np.array([[0.2, 0.8], [0.5, 0.5]]))
    assert abs(kl_divergence(p, p)) < 1e-9


# --- AUC-Judd ---

def test_auc_perfect_predictor():
    fix = np.zeros((5, 5), dtype=int)
    fix.flat[[2, 10, 17]] = 1
    assert auc_judd(fix.astype(float), fix) >= 0.99


def test_auc_anti_predictor():
    fix = np.zeros((5, 5), dtype=int)
    fix.flat[[2, 10, 17]] = 1
    assert auc_judd(1.0 - fix, fix) <= 0.01


def test_auc_constant_map_with_jitter():
    fix = np.zeros((5, 5), dtype=int)
    fix.flat[[1, 7, 12, 18, 23]] = 1
    values = [
        auc_judd(np.ones((5, 5)), fix, AucParams(seed=s)) for s in range(100)
    ]
    assert np.mean(values) == pytest.approx(0.5, abs=0.05)


def test_auc_constant_map_without_jitter():
    fix = np.zeros((3, 3), dtype=int)
    fix[1, 1] = 1
    with pytest.raises(ConstantMapWithoutJitter):
        auc_judd(np.ones((3, 3)), fix, AucParams(jitter=False))


def test_auc_errors():
    with pytest.raises(DimensionMismatch):
        auc_judd(np.ones((2, 2)), np.zeros((3, 3), dtype=int))
    with pytest.raises(NoFixations):
        auc_judd(np.ones((2, 2)), np.zeros((2, 2), dtype=int))


def test_auc_matches_pairwise_oracle():
    rng = np.random.default_rng(42)
    for _ in range(200):
        sal, fix = random_instance(rng)
        got = auc_judd(sal, fix, AucParams(jitter=False))
        assert got == pytest.approx(pairwise_auc(sal, fix), abs=1e-6)


def test_auc_monotone_transform_invariance():
    rng = np.random.default_rng(3)
    for _ in range(50):
        sal, fix = random_instance(rng)
        base = auc_judd(sal, fix)
        for transform in (lambda v: 3 * v + 1, np.exp, np.sqrt, lambda v: v**3):
            assert auc_judd(transform(sal), fix) == pytest.approx(base, abs=0.02)


def test_auc_seed_reproducible():
    rng = np.random.default_rng(5)
    sal, fix = random_instance(rng)
    a = auc_judd(sal, fix, AucParams(seed=11))
    b = auc_judd(sal, fix, AucParams(seed=11))
    assert a == b


def test_auc_accepts_domain_objects():
    fix = FixationMap(np.eye(4, dtype=int))
    sal = SaliencyMap(np.eye(4))
    assert auc_judd(sal, fix) >= 0.99


def test_auc_params_validation():
    with pytest.raises(ValueError):
        AucParams(jitter_scale=0)


# --- NSS ---

def test_nss_all_pixels_fixated():
    rng = np.random.default_rng(0)
    sal = rng.random((6, 6))
    assert nss(sal, np.ones((6, 6), dtype=int)) == pytest.approx(0.0, abs=1e-12)


def test_nss_hand_computed():
    sal = np.zeros((3, 3))
    sal[1, 1] = 9.0
    fix = np.zeros((3, 3), dtype=int)
    fix[1, 1] = 1
    # mean 1, population std sqrt(8): (9-1)/sqrt(8)
    assert nss(sal, fix) == pytest.approx(8 / np.sqrt(8), abs=1e-6)
    assert nss(sal, fix) == pytest.approx(2.828427, abs=1e-6)


def test_nss_constant_map():
    fix = np.zeros((3, 3), dtype=int)
    fix[0, 0] = 1
    with pytest.raises(ZeroVariance):
        nss(np.full((3, 3), 2.0), fix)


def test_nss_errors():
    with pytest.raises(DimensionMismatch):
        nss(np.ones((2, 2)), np.zeros((3, 3), dtype=int))
    with pytest.raises(NoFixations):
        nss(np.eye(2), np.zeros((2, 2), dtype=int))


def test_nss_affine_invariance():
    rng = np.random.default_rng(9)
    for _ in range(100):
        sal, fix = random_instance(rng, shape=(8, 8))
        a = float(rng.uniform(0.01, 10))
        b = float(rng.uniform(-5, 5))
        assert abs(nss(a * sal + b, fix) - nss(sal, fix)) < 1e-9
