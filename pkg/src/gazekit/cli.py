"""Batch command-line front end.

Subcommands::

    gazekit list ROOT [DATASET [STIMULUS]]
    gazekit eval ROOT DATASET --predictions DIR --metrics LIST --out FILE
    gazekit stats ROOT [DATASET]
    gazekit render ROOT DATASET STIMULUS --out PATH [--subject ID]
                   [--frames] [--max-dim N]

ROOT may be omitted wherever the FIXATONS_ROOT environment variable is
set. Exit codes: 0 success, 1 internal error, 2 usage error or unknown
name. The CLI adds no computation of its own; every number it emits is
the corresponding library call's result.
"""

import argparse
import csv
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np
from PIL import Image

from . import dataset as ds
from . import render as rnd
from .errors import GazekitError, MissingMap
from .mapgen import compute_statistics
from .saliency_metrics import AucParams, auc_judd, kl_divergence, nss
from .scanpath_metrics import (
    euclidean_distance,
    scaled_tde,
    string_edit_distance,
    tde_distance,
)
from .types import SaliencyMap

SCANPATH_METRICS = ("euclidean", "string_edit", "tde", "scaled_tde")
SALIENCY_METRICS = ("KL", "AUC_Judd", "NSS")
ALL_METRICS = SCANPATH_METRICS + SALIENCY_METRICS

REPORT_FIELDS = (
    "dataset", "stimulus", "subject_a", "subject_b",
    "metric", "value", "parameters",
)


def _root_path(arg):
    root = arg or os.environ.get("FIXATONS_ROOT")
    if not root:
        raise GazekitError(
            "no collection root given (pass ROOT or set FIXATONS_ROOT)"
        )
    return root


def _fmt(value):
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def cmd_list(args):
    catalog = ds.load_catalog(_root_path(args.root))
    if args.dataset is None:
        names = ds.list_datasets(catalog)
    elif args.stimulus is None:
        names = ds.list_stimuli(catalog, args.dataset)
    else:
        names = ds.list_subjects(catalog, args.dataset, args.stimulus)
    for name in names:
        print(name)
    return 0


def cmd_stats(args):
    catalog = ds.load_catalog(_root_path(args.root))
    stats = compute_statistics(catalog, args.dataset)
    print(json.dumps(asdict(stats), indent=2))
    return 0


def _canonical_metrics(spec):
    lookup = {m.lower(): m for m in ALL_METRICS}
    out = []
    for raw in spec.split(","):
        raw = raw.strip()
        if not raw:
            continue
        if raw.lower() not in lookup:
            raise GazekitError(
                f"unknown metric {raw!r}; choose from {', '.join(ALL_METRICS)}"
            )
        out.append(lookup[raw.lower()])
    return out or list(ALL_METRICS)


def _load_prediction_scanpath(pred_dir, stimulus_name):
    sp_root = Path(pred_dir) / "SCANPATHS"
    for key in (Path(stimulus_name).stem, stimulus_name):
        d = sp_root / key
        if d.is_dir():
            files = sorted(p for p in d.iterdir() if p.is_file())
            if files:
                return ds._parse_scanpath_file(files[0], "model", stimulus_name)
    raise MissingMap(f"no predicted scanpath for {stimulus_name!r}")


def _load_prediction_saliency(pred_dir, stimulus_name, shape):
    sal_root = Path(pred_dir) / "SALIENCY_MAPS"
    if sal_root.is_dir():
        stem = Path(stimulus_name).stem
        for f in sorted(sal_root.iterdir()):
            if f.is_file() and f.stem == stem:
                raw = ds._decode_image(f).astype(float)
                if raw.ndim == 3:
                    raw = raw.mean(axis=2)
                if raw.shape != shape:
                    raise GazekitError(
                        f"predicted map shape {raw.shape} != stimulus {shape}"
                    )
                peak = raw.max()
                return SaliencyMap(raw / peak if peak > 0 else raw)
    raise MissingMap(f"no predicted saliency map for {stimulus_name!r}")


def _eval_rows(catalog, dataset_name, pred_dir, metrics, seed):
    rows = []

    def add(stimulus, subject_a, metric, value, params):
        rows.append({
            "dataset": dataset_name,
            "stimulus": stimulus,
            "subject_a": subject_a,
            "subject_b": "model",
            "metric": metric,
            "value": _fmt(value),
            "parameters": json.dumps(params, sort_keys=True),
        })

    want_scanpath = [m for m in metrics if m in SCANPATH_METRICS]
    want_saliency = [m for m in metrics if m in SALIENCY_METRICS]

    for stimulus in ds.list_stimuli(catalog, dataset_name):
        stim = ds.get_stimulus(catalog, dataset_name, stimulus)
        dims = stim.dims

        if want_scanpath:
            try:
                model_sp = _load_prediction_scanpath(pred_dir, stimulus)
            except GazekitError as exc:
                model_sp = exc
            for subject in ds.list_subjects(catalog, dataset_name, stimulus):
                human = ds.get_scanpath(catalog, dataset_name, stimulus, subject)
                for metric in want_scanpath:
                    params = {}
                    try:
                        if isinstance(model_sp, Exception):
                            raise model_sp
                        if metric == "euclidean":
                            value = euclidean_distance(human, model_sp)
                        elif metric == "string_edit":
                            params = {"n": 5, "substitution_cost": 1}
                            value = string_edit_distance(human, model_sp, dims)
                        elif metric == "tde":
                            params = {"k": 3, "mode": "mean"}
                            value = tde_distance(human, model_sp, k=3)
                        else:
                            value = scaled_tde(human, model_sp, dims)
                    except GazekitError as exc:
                        value = f"ERROR: {exc}"
                    add(stimulus, subject, metric, value, params)

        if want_saliency:
            for metric in want_saliency:
                params = {}
                try:
                    model_sal = _load_prediction_saliency(
                        pred_dir, stimulus, stim.pixels.shape[:2]
                    )
                    if metric == "KL":
                        gt = ds.get_saliency_map(catalog, dataset_name, stimulus)
                        value = kl_divergence(gt, model_sal)
                    else:
                        fixmap = ds.get_fixation_map(catalog, dataset_name, stimulus)
                        if metric == "AUC_Judd":
                            params = {"jitter": True, "seed": seed}
                            value = auc_judd(model_sal, fixmap, AucParams(seed=seed))
                        else:
                            value = nss(model_sal, fixmap)
                except GazekitError as exc:
                    value = f"ERROR: {exc}"
                add(stimulus, "-", metric, value, params)

    rows.sort(key=lambda r: tuple(r[f] for f in REPORT_FIELDS[:5]))
    return rows


def _write_report(rows, out_path):
    out = Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    if out.suffix.lower() == ".json":
        out.write_text(json.dumps(rows, indent=2) + "\n")
    else:
        with out.open("w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=REPORT_FIELDS)
            writer.writeheader()
            writer.writerows(rows)


def cmd_eval(args):
    catalog = ds.load_catalog(_root_path(args.root))
    metrics = _canonical_metrics(args.metrics)
    if args.dataset not in catalog.datasets:
        raise GazekitError(f"unknown dataset {args.dataset!r}")
    rows = _eval_rows(catalog, args.dataset, args.predictions, metrics, args.seed)
    _write_report(rows, args.out)
    n_err = sum(1 for r in rows if r["value"].startswith("ERROR:"))
    if n_err:
        print(f"warning: {n_err}/{len(rows)} evaluations failed", file=sys.stderr)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_render(args):
    catalog = ds.load_catalog(_root_path(args.root))
    stim = ds.get_stimulus(catalog, args.dataset, args.stimulus)
    scanpath = ds.get_scanpath(
        catalog, args.dataset, args.stimulus, args.subject, seed=args.seed
    )
    opts = rnd.RenderOptions(
        plot_max_dim=args.max_dim, as_frames=args.frames
    )
    result = rnd.render_scanpath(stim, scanpath, opts)
    if args.frames:
        paths = rnd.save_frames(result, args.out)
        print(f"wrote {len(paths)} frames to {args.out}")
    else:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        result.save(out)
        print(f"wrote {out}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gazekit",
        description="Fixation collection listing, evaluation and rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list datasets, stimuli or subjects")
    p.add_argument("root", nargs="?", default=None)
    p.add_argument("dataset", nargs="?", default=None)
    p.add_argument("stimulus", nargs="?", default=None)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("eval", help="score model predictions against a dataset")
    p.add_argument("root", nargs="?", default=None)
    p.add_argument("dataset")
    p.add_argument("--predictions", required=True,
                   help="dir mirroring the dataset layout (SCANPATHS and/or "
                        "SALIENCY_MAPS for the model)")
    p.add_argument("--metrics", default=",".join(ALL_METRICS),
                   help="comma-separated metric names")
    p.add_argument("--out", required=True, help="report path (.csv or .json)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("stats", help="collection statistics")
    p.add_argument("root", nargs="?", default=None)
    p.add_argument("dataset", nargs="?", default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("render", help="render a scanpath overlay")
    p.add_argument("root", nargs="?", default=None)
    p.add_argument("dataset")
    p.add_argument("stimulus")
    p.add_argument("--subject", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--frames", action="store_true",
                   help="emit one PNG per fixation prefix instead of one image")
    p.add_argument("--max-dim", type=int, default=0, dest="max_dim")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GazekitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
