import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gazekit.errors import EmptyScanpath, MalformedRow, NonMonotonicTime
from gazekit.types import (
    Fixation,
    FixationMap,
    SaliencyMap,
    Scanpath,
    StimulusImage,
    scanpath_from_rows,
)


def test_single_row_identity():
    sp = scanpath_from_rows([[10, 20, 0.0, 0.2]], "s", "img")
    assert len(sp) == 1
    f = sp.fixations[0]
    assert (f.x, f.y, f.t_start, f.t_end) == (10, 20, 0.0, 0.2)
    assert f.duration == pytest.approx(0.2)


def test_order_preserved():
    rows = [[10, 20, 0.0, 0.2], [30, 40, 0.25, 0.5]]
    sp = scanpath_from_rows(rows)
    assert [(f.x, f.y) for f in sp] == [(10, 20), (30, 40)]


def test_reversed_interval_rejected():
    with pytest.raises(NonMonotonicTime) as exc:
        scanpath_from_rows([[10, 20, 0.5, 0.2]])
    assert exc.value.row_index == 0


def test_decreasing_start_rejected():
    with pytest.raises(NonMonotonicTime) as exc:
        scanpath_from_rows([[1, 1, 0.5, 0.6], [2, 2, 0.3, 0.7]])
    assert exc.value.row_index == 1


def test_empty_rows_rejected():
    with pytest.raises(EmptyScanpath):
        scanpath_from_rows([])


@pytest.mark.parametrize("row", [[1, 2, 3], [1, 2, 3, 4, 5], [1, "x", 3, 4],
                                 [math.nan, 2, 3, 4], [math.inf, 2, 3, 4]])
def test_malformed_rows_rejected(row):
    with pytest.raises(MalformedRow) as exc:
        scanpath_from_rows([[0, 0, 0, 1], row])
    assert exc.value.row_index == 1


def test_fixation_rejects_nonfinite():
    with pytest.raises(ValueError):
        Fixation(math.nan, 0, 0, 1)


def test_scanpath_nonempty_invariant():
    with pytest.raises(EmptyScanpath):
        Scanpath(())


def test_overlapping_intervals_allowed():
    sp = scanpath_from_rows([[0, 0, 0.0, 0.5], [1, 1, 0.3, 0.6]])
    assert len(sp) == 2


row_strategy = st.tuples(
    st.floats(-1e4, 1e4),
    st.floats(-1e4, 1e4),
    st.floats(0, 100),
    st.floats(0, 100),
)


@given(st.lists(row_strategy, min_size=1, max_size=30))
def test_roundtrip_property(raw):
    # sort starts and fix each interval so the input is valid
    raw = sorted(raw, key=lambda r: r[2])
    rows = [(x, y, t0, t0 + abs(t1)) for x, y, t0, t1 in raw]
    sp = scanpath_from_rows(rows)
    back = [(f.x, f.y, f.t_start, f.t_end) for f in sp]
    assert back == [tuple(r) for r in rows]


def test_positions_shape():
    sp = scanpath_from_rows([[1, 2, 0, 1], [3, 4, 1, 2]])
    assert sp.positions.shape == (2, 2)
    assert np.array_equal(sp.positions, [[1, 2], [3, 4]])


def test_fixation_map_binary_invariant():
    with pytest.raises(ValueError):
        FixationMap(np.array([[0, 2]]))
    fm = FixationMap(np.array([[0, 1], [1, 0]]))
    assert fm.n_fixated == 2


def test_saliency_map_invariants():
    with pytest.raises(ValueError):
        SaliencyMap(np.array([[-0.1]]))
    with pytest.raises(ValueError):
        SaliencyMap(np.array([[math.nan]]))


def test_stimulus_image_dims():
    img = StimulusImage(np.zeros((48, 64), dtype=np.uint8))
    assert img.dims == (64, 48)
    with pytest.raises(ValueError):
        StimulusImage(np.zeros((0, 4)))
