"""Render photon-number distributions from pdist CSVs produced by the
sqstates command line.

One file gives a flat bar chart.  Several files (a squeezing sweep) give a
3-D bar surface over (photon number, |zeta|), with |zeta| read from each
file's JSON sidecar; the scripts never recompute any physics.

Usage:
    python3 render_pdist.py DIST.csv [DIST2.csv ...] --out figure.png
"""

import argparse
import csv
import json
import math
import os
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


class SchemaError(RuntimeError):
    pass


def load_pdist(csv_path):
    with open(csv_path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != ["m", "p_m"]:
        raise SchemaError(f"{csv_path}: expected header m,p_m")
    if not rows[1:]:
        raise SchemaError(f"{csv_path}: no data rows")
    probs = np.array([float(r[1]) for r in rows[1:]])
    side_path = os.path.splitext(csv_path)[0] + ".json"
    with open(side_path, encoding="utf-8") as fh:
        side = json.load(fh)
    if side.get("kind") != "pdist":
        raise SchemaError(f"{side_path}: not a pdist sidecar")
    return probs, side


def render_pdist(csv_paths, out_image=None):
    """Bar chart (one file) or 3-D bar surface over (m, |zeta|) (several);
    returns (figure, stats)."""
    if isinstance(csv_paths, (str, os.PathLike)):
        csv_paths = [csv_paths]
    loaded = [load_pdist(p) for p in csv_paths]
    zeta_mods = [math.hypot(s["params"]["zeta_re"], s["params"]["zeta_im"]) for _, s in loaded]
    if len(loaded) == 1:
        probs, side = loaded[0]
        fig, ax = plt.subplots(figsize=(7, 4))
        ax.bar(np.arange(probs.size), probs, width=0.9)
        ax.set_xlabel("photon number m")
        ax.set_ylabel("p_m")
        ax.set_title(f"n={side['params']['n']}  mean N={side['mean_photon']:.4f}  "
                     f"tail={side['tail_mass']:.1e}")
        stats = {"panels": 1, "max_p": float(probs.max()), "mean_photon": side["mean_photon"]}
    elif max(zeta_mods) - min(zeta_mods) < 1e-12:
        # same squeezing, varying excitation: a grid of bar-chart panels
        cols = 3 if len(loaded) > 4 else 2
        nrows = -(-len(loaded) // cols)
        fig, axes = plt.subplots(nrows, cols, figsize=(4 * cols, 2.6 * nrows),
                                 squeeze=False, sharex=True)
        order = np.argsort([s["params"]["n"] for _, s in loaded])
        for ax in axes.ravel()[len(loaded):]:
            ax.set_visible(False)
        for ax, idx in zip(axes.ravel(), order):
            probs, side = loaded[idx]
            ax.bar(np.arange(probs.size), probs, width=0.9)
            ax.set_title(f"n={side['params']['n']}  mean N={side['mean_photon']:.3f}",
                         fontsize=9)
        fig.suptitle("photon distributions (fixed squeezing)")
        fig.tight_layout()
        stats = {"panels": len(loaded), "max_p": float(max(p.max() for p, _ in loaded)),
                 "layout": "grid"}
    else:
        mmax = max(p.size for p, _ in loaded)
        zetas = zeta_mods
        order = np.argsort(zetas)
        fig = plt.figure(figsize=(8, 6))
        ax = fig.add_subplot(111, projection="3d")
        for rank, idx in enumerate(order):
            probs, _ = loaded[idx]
            ax.bar(np.arange(probs.size), probs, zs=zetas[idx], zdir="y",
                   width=0.9, alpha=0.8)
        ax.set_xlabel("photon number m")
        ax.set_ylabel("|zeta|")
        ax.set_zlabel("p_m")
        ax.set_xlim(0, mmax)
        ax.set_title(f"photon distributions over a squeezing sweep ({len(loaded)} panels)")
        stats = {"panels": len(loaded), "zetas": sorted(zetas), "layout": "sweep",
                 "max_p": float(max(p.max() for p, _ in loaded))}
    if out_image:
        fig.savefig(out_image, dpi=110)
    return fig, stats


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv_paths", nargs="+")
    ap.add_argument("--out", required=True)
    args = ap.parse_args(argv)
    try:
        fig, _ = render_pdist(args.csv_paths, args.out)
    except (SchemaError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    plt.close(fig)
    return 0


if __name__ == "__main__":
    sys.exit(main())
