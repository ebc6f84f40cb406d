"""Synthetic mini-collection builder for tests and demos.

Creates one dataset (FIXTURE01) with two stimuli, hand-authored
scanpaths and fixation maps, a stored saliency map for one stimulus and
a physical-setup config so the other gets its saliency map computed on
demand. The authored values are exposed as module constants so tests
can compare parse output against ground truth exactly.
"""

from pathlib import Path

import numpy as np
from PIL import Image

DATASET_NAME = "FIXTURE01"

# stimulus name -> subject -> rows of (x, y, t_start, t_end)
FIXTURE_SCANPATHS = {
    "img_a.png": {
        "s01": [
            (10.0, 20.0, 0.0, 0.2),
            (30.5, 12.25, 0.25, 0.5),
            (55.0, 40.0, 0.55, 0.9),
            (20.0, 35.0, 0.95, 1.2),
            (44.0, 8.0, 1.25, 1.6),
        ],
        "s02": [
            (5.0, 5.0, 0.0, 0.3),
            (60.0, 44.0, 0.35, 0.8),
        ],
    },
    "img_b.png": {
        "s01": [
            (8.0, 8.0, 0.0, 0.4),
            (24.0, 24.0, 0.45, 1.0),
        ],
    },
}

# stimulus name -> (width, height)
FIXTURE_DIMS = {"img_a.png": (64, 48), "img_b.png": (32, 32)}

# stimulus name -> fixated (x, y) integer pixels in the fixation map
FIXTURE_FIXATED_PIXELS = {
    "img_a.png": [(10, 20), (30, 12), (55, 40)],
    "img_b.png": [(8, 8), (24, 24)],
}

FIXTURE_CONFIG = """\
# synthetic recording setup
screen_px_w = 1024
screen_px_h = 768
screen_cm_w = 51
screen_cm_h = 31
distance_cm = 72
pixels_per_degree = 4.0
"""


def _write_image(path, array):
    Image.fromarray(array).save(path)


def build_fixture(root):
    """Write the mini-collection under ``root``; returns the root path."""
    root = Path(root)
    ds = root / DATASET_NAME
    for sub in ("STIMULI", "SCANPATHS", "FIXATION_MAPS", "SALIENCY_MAPS"):
        (ds / sub).mkdir(parents=True, exist_ok=True)

    # img_a: grayscale gradient; img_b: color blocks
    w, h = FIXTURE_DIMS["img_a.png"]
    grad = np.linspace(0, 255, w, dtype=np.uint8)[None, :].repeat(h, axis=0)
    _write_image(ds / "STIMULI" / "img_a.png", grad)

    w, h = FIXTURE_DIMS["img_b.png"]
    rgb = np.zeros((h, w, 3), dtype=np.uint8)
    rgb[: h // 2, :, 0] = 200
    rgb[h // 2 :, :, 2] = 200
    _write_image(ds / "STIMULI" / "img_b.png", rgb)

    for stim, per_subject in FIXTURE_SCANPATHS.items():
        stim_dir = ds / "SCANPATHS" / Path(stim).stem
        stim_dir.mkdir(exist_ok=True)
        for subject, rows in per_subject.items():
            lines = ["{}, {}, {}, {}".format(*row) for row in rows]
            (stim_dir / f"{subject}.txt").write_text("\n".join(lines) + "\n")

    for stim, pixels in FIXTURE_FIXATED_PIXELS.items():
        w, h = FIXTURE_DIMS[stim]
        fm = np.zeros((h, w), dtype=np.uint8)
        for x, y in pixels:
            fm[y, x] = 255
        _write_image(ds / "FIXATION_MAPS" / f"{Path(stim).stem}.png", fm)

    # stored saliency map only for img_b; img_a's comes from the config
    w, h = FIXTURE_DIMS["img_b.png"]
    yy, xx = np.mgrid[0:h, 0:w]
    blob = np.exp(-(((xx - 16) ** 2 + (yy - 16) ** 2) / (2 * 36.0)))
    _write_image(
        ds / "SALIENCY_MAPS" / "img_b.png",
        np.round(blob / blob.max() * 255).astype(np.uint8),
    )

    (ds / "dataset.toml").write_text(FIXTURE_CONFIG)
    return root
