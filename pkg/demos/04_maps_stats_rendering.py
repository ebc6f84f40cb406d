"""Saliency map generation, collection statistics, and file-based
rendering (overlay PNG, side-by-side panel, animation frames)."""

import tempfile
from pathlib import Path

import gazekit
from gazekit.fixture import build_fixture

out_dir = Path(tempfile.mkdtemp()) / "renders"
root = build_fixture(Path(tempfile.mkdtemp()) / "collection")
catalog = gazekit.load_catalog(root)

# one degree of visual angle in pixels, from the recording geometry;
# this is the blur sigma used when generating saliency maps
ppd = gazekit.pixels_per_degree(screen_px_w=1024, screen_cm_w=51, distance_cm=72)
print(f"pixels per degree for the reference setup: {ppd:.2f}")

stats = gazekit.compute_statistics(catalog)
print(f"\ncollection statistics over {stats.n_scanpaths} scanpaths:")
print(f"  fixations per second: {stats.fixations_per_second:.3f}")
print(f"  average saccade length: {stats.avg_saccade_length:.2f} px")

stimulus = gazekit.get_stimulus(catalog, "FIXTURE01", "img_a.png")
scanpath = gazekit.get_scanpath(catalog, "FIXTURE01", "img_a.png", "s01")
salmap = gazekit.get_saliency_map(catalog, "FIXTURE01", "img_a.png")
fixmap = gazekit.get_fixation_map(catalog, "FIXTURE01", "img_a.png")

out_dir.mkdir(parents=True)

overlay = gazekit.render_scanpath(stimulus, scanpath)
overlay.save(out_dir / "overlay.png")

panel = gazekit.render_map_panel(stimulus, saliency=salmap, fixmap=fixmap)
panel.save(out_dir / "panel.png")

frames = gazekit.render_scanpath(
    stimulus, scanpath, gazekit.RenderOptions(as_frames=True, plot_max_dim=256)
)
paths = gazekit.save_frames(frames, out_dir / "animation")

print(f"\nwrote overlay ({overlay.size}), panel ({panel.size}) and "
      f"{len(paths)} animation frames under {out_dir}")
