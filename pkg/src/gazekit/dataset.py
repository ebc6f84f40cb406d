"""On-disk fixation collection: catalog loading and the list/get API.

Expected layout::

    ROOT/
      DATASET_NAME/
        STIMULI/            original images (png, jpg, ...)
        SCANPATHS/          one folder per stimulus (named after the
          IMAGE_ID/         stimulus file, with or without extension),
            <subject>.txt   one text file per subject scanpath
        FIXATION_MAPS/      binary maps, matched to stimuli by stem
        SALIENCY_MAPS/      continuous maps, matched by stem
        dataset.toml        optional flat key/value physical-setup config

Scanpath files hold one fixation per line, four numeric fields
(x, y, t_start, t_end) separated by commas and/or whitespace; blank
lines are ignored. Subject id = filename without extension.
"""

import random
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import (
    ConfigParseError,
    DecodeError,
    DimensionMismatch,
    MalformedLayout,
    MissingMap,
    NoScanpaths,
    RootNotFound,
    UnknownDataset,
    UnknownStimulus,
    UnknownSubject,
)
from .mapgen import pixels_per_degree, saliency_from_fixations
from .types import FixationMap, SaliencyMap, StimulusImage, scanpath_from_rows

_IMAGE_EXTS = {".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff"}

_CONFIG_KEYS = {
    "pixels_per_degree",
    "screen_px_w",
    "screen_px_h",
    "screen_cm_w",
    "screen_cm_h",
    "distance_cm",
}


@dataclass(frozen=True)
class DatasetConfig:
    """Physical setup of a recording; all fields optional."""

    pixels_per_degree: float | None = None
    screen_px: tuple | None = None
    screen_cm: tuple | None = None
    eye_screen_distance_cm: float | None = None

    def effective_pixels_per_degree(self):
        """Explicit px/deg value, or one derived from screen geometry."""
        if self.pixels_per_degree is not None:
            return self.pixels_per_degree
        if (
            self.screen_px is not None
            and self.screen_cm is not None
            and self.eye_screen_distance_cm is not None
        ):
            return pixels_per_degree(
                self.screen_px[0], self.screen_cm[0], self.eye_screen_distance_cm
            )
        return None


@dataclass(frozen=True)
class StimulusEntry:
    stimulus_path: Path
    fixation_map_path: Path | None = None
    saliency_map_path: Path | None = None
    scanpaths: dict = field(default_factory=dict)  # subject_id -> Path


@dataclass(frozen=True)
class DatasetEntry:
    name: str
    stimuli: dict  # stimulus filename -> StimulusEntry
    config: DatasetConfig = DatasetConfig()


@dataclass(frozen=True)
class DatasetCatalog:
    root_path: Path
    datasets: dict  # name -> DatasetEntry


def _parse_config(path):
    """Parse the flat ``key = value`` dataset config file."""
    values = {}
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigParseError(f"{path}:{lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigParseError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            num = float(val.strip())
        except ValueError:
            raise ConfigParseError(
                f"{path}:{lineno}: non-numeric value {val.strip()!r}"
            ) from None
        if num <= 0:
            raise ConfigParseError(f"{path}:{lineno}: {key} must be > 0")
        values[key] = num

    def pair(w_key, h_key):
        w, h = values.get(w_key), values.get(h_key)
        if (w is None) != (h is None):
            raise ConfigParseError(
                f"{path}: {w_key} and {h_key} must be given together"
            )
        return None if w is None else (w, h)

    return DatasetConfig(
        pixels_per_degree=values.get("pixels_per_degree"),
        screen_px=pair("screen_px_w", "screen_px_h"),
        screen_cm=pair("screen_cm_w", "screen_cm_h"),
        eye_screen_distance_cm=values.get("distance_cm"),
    )


def _load_dataset(ds_dir):
    stimuli_dir = ds_dir / "STIMULI"
    if not stimuli_dir.is_dir():
        raise MalformedLayout(f"{ds_dir}: missing STIMULI directory")

    stim_files = sorted(
        p for p in stimuli_dir.iterdir()
        if p.is_file() and p.suffix.lower() in _IMAGE_EXTS
    )
    by_name = {p.name: p for p in stim_files}
    by_stem = {}
    for p in stim_files:
        by_stem.setdefault(p.stem, p.name)

    def match_stimulus(key):
        if key in by_name:
            return key
        return by_stem.get(key)

    scanpaths = {name: {} for name in by_name}
    sp_root = ds_dir / "SCANPATHS"
    if sp_root.is_dir():
        for image_dir in sorted(sp_root.iterdir()):
            if not image_dir.is_dir():
                continue
            stim_name = match_stimulus(image_dir.name)
            if stim_name is None:
                raise MalformedLayout(
                    f"{image_dir}: scanpath folder has no matching stimulus"
                )
            for f in sorted(image_dir.iterdir()):
                if f.is_file():
                    scanpaths[stim_name][f.stem] = f

    def map_lookup(subdir):
        found = {}
        d = ds_dir / subdir
        if d.is_dir():
            for f in sorted(d.iterdir()):
                if f.is_file() and f.suffix.lower() in _IMAGE_EXTS:
                    stim_name = match_stimulus(f.name) or match_stimulus(f.stem)
                    if stim_name is not None:
                        found[stim_name] = f
        return found

    fixmaps = map_lookup("FIXATION_MAPS")
    salmaps = map_lookup("SALIENCY_MAPS")

    config_path = ds_dir / "dataset.toml"
    config = _parse_config(config_path) if config_path.is_file() else DatasetConfig()

    stimuli = {
        name: StimulusEntry(
            stimulus_path=path,
            fixation_map_path=fixmaps.get(name),
            saliency_map_path=salmaps.get(name),
            scanpaths=scanpaths[name],
        )
        for name, path in by_name.items()
    }
    return DatasetEntry(name=ds_dir.name, stimuli=stimuli, config=config)


def load_catalog(root_path):
    """Index every dataset directory under ``root_path``."""
    root = Path(root_path)
    if not root.is_dir():
        raise RootNotFound(f"collection root not found: {root}")
    datasets = {}
    for ds_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        datasets[ds_dir.name] = _load_dataset(ds_dir)
    return DatasetCatalog(root_path=root, datasets=datasets)


def _dataset(catalog, name):
    try:
        return catalog.datasets[name]
    except KeyError:
        raise UnknownDataset(f"unknown dataset {name!r}") from None


def _stimulus(catalog, dataset_name, stimulus_name):
    ds = _dataset(catalog, dataset_name)
    try:
        return ds, ds.stimuli[stimulus_name]
    except KeyError:
        raise UnknownStimulus(
            f"unknown stimulus {stimulus_name!r} in dataset {dataset_name!r}"
        ) from None


def list_datasets(catalog):
    return sorted(catalog.datasets)


def list_stimuli(catalog, dataset_name):
    return sorted(_dataset(catalog, dataset_name).stimuli)


def list_subjects(catalog, dataset_name, stimulus_name):
    _, entry = _stimulus(catalog, dataset_name, stimulus_name)
    return sorted(entry.scanpaths)


def _decode_image(path):
    try:
        with Image.open(path) as img:
            img.load()
            if img.mode in ("L", "I", "I;16", "F"):
                return np.asarray(img.convert("L"))
            return np.asarray(img.convert("RGB"))
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        raise DecodeError(f"cannot decode {path}: {exc}") from None


def _stimulus_size(entry):
    # (width, height) without a full decode
    try:
        with Image.open(entry.stimulus_path) as img:
            return img.size
    except (UnidentifiedImageError, OSError) as exc:
        raise DecodeError(f"cannot decode {entry.stimulus_path}: {exc}") from None


def get_stimulus(catalog, dataset_name, stimulus_name):
    _, entry = _stimulus(catalog, dataset_name, stimulus_name)
    return StimulusImage(_decode_image(entry.stimulus_path))


def get_fixation_map(catalog, dataset_name, stimulus_name):
    """Binary fixation map; stored pixels > 127 count as fixated."""
    _, entry = _stimulus(catalog, dataset_name, stimulus_name)
    if entry.fixation_map_path is None:
        raise MissingMap(
            f"no fixation map for {stimulus_name!r} in {dataset_name!r}"
        )
    raw = _decode_image(entry.fixation_map_path)
    if raw.ndim == 3:
        raw = raw.mean(axis=2)
    w, h = _stimulus_size(entry)
    if raw.shape != (h, w):
        raise DimensionMismatch(
            f"fixation map shape {raw.shape} != stimulus shape {(h, w)}"
        )
    return FixationMap((raw > 127).astype(np.uint8))


def get_saliency_map(catalog, dataset_name, stimulus_name):
    """Stored saliency map rescaled to [0, 1], or one computed on demand
    by blurring the fixation map with the dataset's one-degree sigma."""
    ds, entry = _stimulus(catalog, dataset_name, stimulus_name)
    if entry.saliency_map_path is not None:
        raw = _decode_image(entry.saliency_map_path).astype(float)
        if raw.ndim == 3:
            raw = raw.mean(axis=2)
        w, h = _stimulus_size(entry)
        if raw.shape != (h, w):
            raise DimensionMismatch(
                f"saliency map shape {raw.shape} != stimulus shape {(h, w)}"
            )
        peak = raw.max()
        return SaliencyMap(raw / peak if peak > 0 else raw)
    ppd = ds.config.effective_pixels_per_degree()
    if entry.fixation_map_path is not None and ppd is not None:
        fixmap = get_fixation_map(catalog, dataset_name, stimulus_name)
        return saliency_from_fixations(fixmap, sigma_px=ppd)
    raise MissingMap(
        f"no saliency source for {stimulus_name!r} in {dataset_name!r} "
        "(need a stored map, or a fixation map plus px/deg config)"
    )


def _parse_scanpath_file(path, subject_id, stimulus_ref):
    rows = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        rows.append([field for field in re.split(r"[,\s]+", line) if field])
    return scanpath_from_rows(rows, subject_id=subject_id, stimulus_ref=stimulus_ref)


def get_scanpath(catalog, dataset_name, stimulus_name, subject=None, seed=0):
    """One subject's scanpath; with ``subject=None`` a uniformly random
    subject is drawn from a generator seeded with ``seed``."""
    _, entry = _stimulus(catalog, dataset_name, stimulus_name)
    if not entry.scanpaths:
        raise NoScanpaths(
            f"no scanpaths for {stimulus_name!r} in {dataset_name!r}"
        )
    if subject is None:
        subject = random.Random(seed).choice(sorted(entry.scanpaths))
    if subject not in entry.scanpaths:
        raise UnknownSubject(
            f"unknown subject {subject!r} for {stimulus_name!r}"
        )
    return _parse_scanpath_file(entry.scanpaths[subject], subject, stimulus_name)


def iter_scanpaths(catalog, dataset_name=None):
    """Yield every scanpath in a dataset (or the whole catalog)."""
    if dataset_name is not None:
        names = [_dataset(catalog, dataset_name).name]
    else:
        names = list_datasets(catalog)
    for ds_name in names:
        for stim_name in list_stimuli(catalog, ds_name):
            for subject in list_subjects(catalog, ds_name, stim_name):
                yield get_scanpath(catalog, ds_name, stim_name, subject)
