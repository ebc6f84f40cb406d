"""The four scanpath similarity measures, including the time-shift
example that motivates going beyond plain pointwise distance."""

from gazekit import (
    TdeMode,
    euclidean_distance,
    scaled_tde,
    string_edit_distance,
    tde_distance,
)
from gazekit.types import scanpath_from_rows


def path(points):
    return scanpath_from_rows(
        [(x, y, 0.2 * i, 0.2 * i + 0.1) for i, (x, y) in enumerate(points)]
    )


DIMS = (700, 100)  # seven 100px cells in a row
CELL = {c: ((i + 0.5) * 100, 50.0) for i, c in enumerate("ABCDEFZ")}


def realize(letters):
    return path([CELL[c] for c in letters])


s = realize("ABCDEF")
h = realize("ZABCDE")  # same tour, shifted by one fixation

print("ABCDEF vs ZABCDE (one-step time shift):")
print(f"  euclidean:   {euclidean_distance(s, h):7.2f} px   <- punishes the shift")
print(f"  string-edit: {string_edit_distance(s, h, DIMS, n=7):7d} edits")
print(f"  tde (k=1):   {tde_distance(s, h, k=1):7.2f} px   <- shift-tolerant")
print(f"  scaled tde:  {scaled_tde(s, h, DIMS):7.4f}      (1.0 = identical)")

print("\nmean-minimal vs Hausdorff aggregation:")
a = path([(0, 0), (100, 0), (200, 0), (300, 0)])
b = path([(0, 0), (100, 0)])
for mode in TdeMode:
    print(f"  tde k=1 {mode.value:10s}: {tde_distance(a, b, k=1, mode=mode):.2f} px")

print("\nidentity checks:")
print(f"  euclidean(s, s) = {euclidean_distance(s, s)}")
print(f"  scaled_tde(s, s) = {scaled_tde(s, s, DIMS)}")

# unequal lengths: strict by default, opt-in truncation
short = path([(50, 50), (650, 50)])
try:
    euclidean_distance(s, short)
except Exception as exc:
    print(f"\nunequal lengths raise: {type(exc).__name__}")
print(f"with truncate=True: {euclidean_distance(s, short, truncate=True):.2f} px")
