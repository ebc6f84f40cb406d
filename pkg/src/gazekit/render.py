"""Headless rendering: scanpath overlays, map panels, animation frames.

Everything renders to in-memory PIL images (callers decide where to save
them), so the module is safe in CI and batch jobs. Rendering is
deterministic: identical inputs give bit-identical pixels.
"""

import math
from dataclasses import dataclass

import numpy as np
from PIL import Image, ImageDraw

from .errors import DimensionMismatch, EmptyScanpath, NothingToShow
from .types import FixationMap, SaliencyMap, StimulusImage


@dataclass(frozen=True)
class RenderOptions:
    put_numbers: bool = True
    plot_max_dim: int = 0  # 0 = no resize
    line_color: tuple = (0, 255, 0)
    dot_color: tuple = (255, 0, 0)
    as_frames: bool = False

    def __post_init__(self):
        if self.plot_max_dim < 0:
            raise ValueError("plot_max_dim must be >= 0")


def _to_rgb_image(stimulus):
    pixels = stimulus.pixels if isinstance(stimulus, StimulusImage) else np.asarray(stimulus)
    arr = np.asarray(pixels)
    if arr.dtype != np.uint8:
        arr = np.clip(arr, 0, 255).astype(np.uint8)
    img = Image.fromarray(arr)
    return img.convert("RGB")


def _resize(img, plot_max_dim):
    if plot_max_dim <= 0 or max(img.size) <= 0:
        return img
    scale = plot_max_dim / max(img.size)
    new_size = (max(1, round(img.size[0] * scale)),
                max(1, round(img.size[1] * scale)))
    return img.resize(new_size, Image.BILINEAR)


def _dot_radius(img):
    diag = math.hypot(*img.size)
    return max(3, int(diag / 100))


def _draw_overlay(img, fixations, opts):
    draw = ImageDraw.Draw(img)
    r = _dot_radius(img)
    pts = [(f.x, f.y) for f in fixations]
    if len(pts) > 1:
        draw.line(pts, fill=opts.line_color, width=max(1, r // 2))
    for i, (x, y) in enumerate(pts, start=1):
        draw.ellipse([x - r, y - r, x + r, y + r], fill=opts.dot_color)
        if opts.put_numbers:
            draw.text((x + r + 1, y - r), str(i), fill=(255, 255, 255))
    return img


def render_scanpath(stimulus, scanpath, opts=RenderOptions()):
    """Overlay a scanpath on its stimulus.

    Returns one image, or — with ``as_frames`` — a list of images where
    frame i shows the first i fixations (the last frame equals the
    static render). With ``plot_max_dim > 0`` the output is resized so
    its larger dimension matches.
    """
    fixations = list(scanpath)
    if not fixations:
        raise EmptyScanpath("nothing to render")
    base = _to_rgb_image(stimulus)
    if opts.as_frames:
        frames = []
        for i in range(1, len(fixations) + 1):
            frame = _draw_overlay(base.copy(), fixations[:i], opts)
            frames.append(_resize(frame, opts.plot_max_dim))
        return frames
    return _resize(_draw_overlay(base.copy(), fixations, opts), opts.plot_max_dim)


def _heat_image(saliency):
    # simple blue->red heat ramp over the normalized grid
    g = np.asarray(saliency.grid if isinstance(saliency, SaliencyMap) else saliency,
                   dtype=float)
    peak = g.max()
    if peak > 0:
        g = g / peak
    rgb = np.stack(
        [
            (g * 255),
            (np.minimum(g, 1 - g) * 2 * 255),
            ((1 - g) * 255),
        ],
        axis=2,
    )
    return Image.fromarray(rgb.astype(np.uint8), "RGB")


def _binary_image(fixmap):
    g = np.asarray(fixmap.grid if isinstance(fixmap, FixationMap) else fixmap)
    return Image.fromarray((g * 255).astype(np.uint8)).convert("RGB")


def render_map_panel(stimulus, saliency=None, fixmap=None, opts=RenderOptions()):
    """Horizontal panel: stimulus, then saliency heat map, then fixation
    map — whichever are given. All parts share the stimulus height."""
    if saliency is None and fixmap is None:
        raise NothingToShow("provide a saliency map and/or a fixation map")
    base = _to_rgb_image(stimulus)
    parts = [base]
    for m, conv in ((saliency, _heat_image), (fixmap, _binary_image)):
        if m is None:
            continue
        img = conv(m)
        if img.size != base.size:
            raise DimensionMismatch(
                f"map size {img.size} != stimulus size {base.size}"
            )
        parts.append(img)
    panel = Image.new("RGB", (base.size[0] * len(parts), base.size[1]))
    for i, part in enumerate(parts):
        panel.paste(part, (i * base.size[0], 0))
    return _resize(panel, opts.plot_max_dim)


def save_frames(frames, out_dir, prefix="frame"):
    """Write frames as zero-padded numbered PNGs; returns the paths."""
    from pathlib import Path

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    width = max(4, len(str(len(frames))))
    paths = []
    for i, frame in enumerate(frames, start=1):
        path = out / f"{prefix}_{i:0{width}d}.png"
        frame.save(path)
        paths.append(path)
    return paths
