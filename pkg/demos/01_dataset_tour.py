"""Tour of the on-disk collection API.

Builds the bundled synthetic mini-collection in a temp directory, loads
the catalog and walks the list/get surface.
"""

import tempfile
from pathlib import Path

import gazekit
from gazekit.fixture import build_fixture

root = build_fixture(Path(tempfile.mkdtemp()) / "collection")
print(f"collection at {root}\n")

catalog = gazekit.load_catalog(root)

for dataset in gazekit.list_datasets(catalog):
    print(f"dataset: {dataset}")
    for stimulus in gazekit.list_stimuli(catalog, dataset):
        image = gazekit.get_stimulus(catalog, dataset, stimulus)
        print(f"  stimulus {stimulus}: {image.width}x{image.height}, "
              f"{'grayscale' if image.pixels.ndim == 2 else 'color'}")
        for subject in gazekit.list_subjects(catalog, dataset, stimulus):
            sp = gazekit.get_scanpath(catalog, dataset, stimulus, subject)
            print(f"    subject {subject}: {len(sp)} fixations, "
                  f"{sp.duration:.2f}s recorded")

# fixation map and saliency map for one stimulus
fixmap = gazekit.get_fixation_map(catalog, "FIXTURE01", "img_a.png")
print(f"\nimg_a fixation map: {fixmap.n_fixated} fixated pixels")

# img_a has no stored saliency map: it is computed on demand by blurring
# the fixation map with the dataset's one-degree-of-visual-angle sigma
salmap = gazekit.get_saliency_map(catalog, "FIXTURE01", "img_a.png")
print(f"img_a saliency map: shape {salmap.shape}, max {salmap.grid.max():.3f}")

# omitting the subject draws one at random, reproducibly via the seed
sp = gazekit.get_scanpath(catalog, "FIXTURE01", "img_a.png", seed=0)
print(f"\nrandom (seed 0) scanpath is subject {sp.subject_id!r}")
