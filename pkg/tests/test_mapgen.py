import numpy as np
import pytest

from oracles import dense_gaussian_blur, trig_pixels_per_degree

from gazekit.errors import (
    EmptyFixationMap,
    NoData,
    NonPositiveInput,
    NonPositiveSigma,
    UnknownDataset,
)
from gazekit.mapgen import (
    blur_fixation_map,
    compute_statistics,
    pixels_per_degree,
    saliency_from_fixations,
    stats_from_scanpaths,
)
from gazekit.types import FixationMap, scanpath_from_rows


# --- pixels per degree ---

def test_ppd_reference_setup():
    got = pixels_per_degree(1024, 51, 72)
    assert got == pytest.approx(trig_pixels_per_degree(1024, 51, 72), abs=1e-6)
    assert got == pytest.approx(25.2, abs=0.1)


def test_ppd_unit_construction():
    # distance chosen so one degree subtends exactly 1 cm
    d = 0.5 / np.tan(np.radians(0.5))
    assert pixels_per_degree(100, 100, d) == pytest.approx(1.0, abs=1e-12)


def test_ppd_rejects_nonpositive():
    for args in ((0, 51, 72), (1024, 0, 72), (1024, 51, 0), (1024, 51, -1)):
        with pytest.raises(NonPositiveInput):
            pixels_per_degree(*args)


def test_ppd_monotonicity():
    base = pixels_per_degree(1024, 51, 72)
    assert pixels_per_degree(1024, 51, 80) > base
    assert pixels_per_degree(1200, 51, 72) > base


# --- saliency generation ---

def single_fix_map(h, w, y, x):
    g = np.zeros((h, w), dtype=np.uint8)
    g[y, x] = 1
    return FixationMap(g)


def test_peak_at_fixation():
    fm = single_fix_map(41, 41, 20, 20)
    sal = saliency_from_fixations(fm, sigma_px=3.0)
    assert sal.grid[20, 20] == 1.0
    assert np.unravel_index(sal.grid.argmax(), sal.grid.shape) == (20, 20)


def test_radial_symmetry():
    fm = single_fix_map(41, 41, 20, 20)
    g = saliency_from_fixations(fm, sigma_px=3.0).grid
    assert np.allclose(g, g[::-1, :], atol=1e-9)
    assert np.allclose(g, g[:, ::-1], atol=1e-9)
    assert np.allclose(g, g.T, atol=1e-9)


def test_two_far_fixations_two_peaks():
    fm = np.zeros((32, 32), dtype=np.uint8)
    fm[5, 5] = 1
    fm[26, 26] = 1
    sal = saliency_from_fixations(FixationMap(fm), sigma_px=1.5).grid
    assert sal[5, 5] == pytest.approx(1.0, abs=1e-3)
    assert sal[26, 26] == pytest.approx(1.0, abs=1e-3)


def test_matches_dense_convolution_oracle():
    rng = np.random.default_rng(7)
    grid = (rng.random((32, 32)) < 0.05).astype(np.uint8)
    grid[3, 3] = 1
    for sigma in (1.0, 2.5):
        mine = blur_fixation_map(grid, sigma)
        oracle = dense_gaussian_blur(grid, sigma)
        assert np.abs(mine - oracle).max() < 1e-6


def test_blur_linearity():
    a = np.zeros((32, 32))
    b = np.zeros((32, 32))
    a[4, 4] = 1
    b[28, 28] = 1
    sigma = 1.5
    combined = blur_fixation_map(a + b, sigma)
    separate = blur_fixation_map(a, sigma) + blur_fixation_map(b, sigma)
    assert np.abs(combined - separate).max() < 1e-9


def test_generation_errors():
    with pytest.raises(EmptyFixationMap):
        saliency_from_fixations(np.zeros((4, 4)), 1.0)
    with pytest.raises(NonPositiveSigma):
        blur_fixation_map(np.ones((4, 4)), 0)


# --- statistics ---

def make_path(rows):
    return scanpath_from_rows(rows)


def test_fixation_rate():
    sp = make_path([(0, 0, 0.0, 0.2), (1, 1, 0.3, 0.6), (2, 2, 0.7, 1.0)])
    stats = stats_from_scanpaths([sp])
    assert stats.fixations_per_second == pytest.approx(3.0)
    assert stats.n_scanpaths == 1
    assert stats.n_fixations == 3


def test_saccade_length():
    sp = make_path([(0, 0, 0, 0.1), (3, 4, 0.2, 0.3), (3, 4, 0.4, 0.5)])
    stats = stats_from_scanpaths([sp])
    assert stats.avg_saccade_length == pytest.approx(2.5)


def test_single_fixation_contributes_no_saccade():
    sps = [
        make_path([(0, 0, 0, 1.0)]),
        make_path([(0, 0, 0, 0.5), (6, 8, 0.5, 1.0)]),
    ]
    stats = stats_from_scanpaths(sps)
    assert stats.avg_saccade_length == pytest.approx(10.0)
    assert stats.n_fixations == 3


def test_empty_scope():
    with pytest.raises(NoData):
        stats_from_scanpaths([])


def test_aggregation_consistency():
    # pooled stats equal the count-weighted combination of the parts
    part_a = [make_path([(0, 0, 0, 0.5), (10, 0, 0.5, 1.0)])]
    part_b = [
        make_path([(0, 0, 0, 0.25), (0, 30, 0.3, 0.5), (40, 0, 0.6, 2.0)])
    ]
    pooled = stats_from_scanpaths(part_a + part_b)
    sa, sb = stats_from_scanpaths(part_a), stats_from_scanpaths(part_b)
    time_a = sa.n_fixations / sa.fixations_per_second
    time_b = sb.n_fixations / sb.fixations_per_second
    assert pooled.fixations_per_second == pytest.approx(
        (sa.n_fixations + sb.n_fixations) / (time_a + time_b), abs=1e-9
    )
    n_sacc_a, n_sacc_b = 1, 2
    assert pooled.avg_saccade_length == pytest.approx(
        (sa.avg_saccade_length * n_sacc_a + sb.avg_saccade_length * n_sacc_b)
        / (n_sacc_a + n_sacc_b),
        abs=1e-9,
    )


def test_catalog_statistics(catalog):
    stats = compute_statistics(catalog)
    per_dataset = compute_statistics(catalog, "FIXTURE01")
    assert stats == per_dataset
    assert stats.n_scanpaths == 3
    with pytest.raises(UnknownDataset):
        compute_statistics(catalog, "NOPE")
