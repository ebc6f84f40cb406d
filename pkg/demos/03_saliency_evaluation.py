"""Scoring predicted saliency maps against ground-truth fixations with
KL divergence, AUC-Judd and NSS."""

import numpy as np

from gazekit import AucParams, auc_judd, kl_divergence, nss, saliency_from_fixations

rng = np.random.default_rng(0)

# ground truth: a handful of fixated pixels on a 64x64 frame
fixmap = np.zeros((64, 64), dtype=int)
for x, y in [(12, 20), (40, 30), (50, 50), (22, 44)]:
    fixmap[y, x] = 1

truth = saliency_from_fixations(fixmap, sigma_px=4.0)

candidates = {
    "ground truth itself": truth.grid,
    "blurrier version": saliency_from_fixations(fixmap, sigma_px=10.0).grid,
    "uniform map": np.full((64, 64), 0.5),
    "pure noise": rng.random((64, 64)),
    "inverted truth": truth.grid.max() - truth.grid,
}

print(f"{'prediction':22s} {'KL':>8s} {'AUC-Judd':>9s} {'NSS':>8s}")
for name, pred in candidates.items():
    kl = kl_divergence(truth, pred)
    auc = auc_judd(pred, fixmap, AucParams(seed=0))
    try:
        z = f"{nss(pred, fixmap):8.3f}"
    except Exception:
        z = "   (constant map)"
    print(f"{name:22s} {kl:8.3f} {auc:9.3f} {z}")

print("\nAUC only ranks: any monotone transform leaves it unchanged")
pred = rng.random((64, 64))
print(f"  auc(S)      = {auc_judd(pred, fixmap):.4f}")
print(f"  auc(exp(S)) = {auc_judd(np.exp(pred), fixmap):.4f}")

print("NSS is invariant under positive affine transforms")
print(f"  nss(S)      = {nss(pred, fixmap):.6f}")
print(f"  nss(3S + 2) = {nss(3 * pred + 2, fixmap):.6f}")
