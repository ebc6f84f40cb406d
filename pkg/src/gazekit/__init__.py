"""gazekit: human fixation dataset access, scanpath similarity metrics,
and saliency map evaluation."""

from . import errors
from .dataset import (
    DatasetCatalog,
    DatasetConfig,
    DatasetEntry,
    get_fixation_map,
    get_saliency_map,
    get_scanpath,
    get_stimulus,
    iter_scanpaths,
    list_datasets,
    list_stimuli,
    list_subjects,
    load_catalog,
)
from .mapgen import (
    CollectionStats,
    blur_fixation_map,
    compute_statistics,
    pixels_per_degree,
    saliency_from_fixations,
    stats_from_scanpaths,
)
from .render import RenderOptions, render_map_panel, render_scanpath, save_frames
from .saliency_metrics import AucParams, auc_judd, kl_divergence, nss
from .scanpath_metrics import (
    GridSpec,
    TdeMode,
    euclidean_distance,
    quantize_to_tokens,
    scaled_tde,
    string_edit_distance,
    tde_distance,
    token_edit_distance,
)
from .types import (
    Fixation,
    FixationMap,
    SaliencyMap,
    Scanpath,
    StimulusImage,
    scanpath_from_rows,
)

__version__ = "0.1.0"

__all__ = [
    "AucParams",
    "CollectionStats",
    "DatasetCatalog",
    "DatasetConfig",
    "DatasetEntry",
    "Fixation",
    "FixationMap",
    "GridSpec",
    "RenderOptions",
    "SaliencyMap",
    "Scanpath",
    "StimulusImage",
    "TdeMode",
    "auc_judd",
    "blur_fixation_map",
    "compute_statistics",
    "errors",
    "euclidean_distance",
    "get_fixation_map",
    "get_saliency_map",
    "get_scanpath",
    "get_stimulus",
    "iter_scanpaths",
    "kl_divergence",
    "list_datasets",
    "list_stimuli",
    "list_subjects",
    "load_catalog",
    "nss",
    "pixels_per_degree",
    "quantize_to_tokens",
    "render_map_panel",
    "render_scanpath",
    "saliency_from_fixations",
    "save_frames",
    "scaled_tde",
    "scanpath_from_rows",
    "stats_from_scanpaths",
    "string_edit_distance",
    "tde_distance",
    "token_edit_distance",
]
