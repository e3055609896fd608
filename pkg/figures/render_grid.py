"""Render a phase-space surface plot from a grid CSV + manifest produced by
the sqstates command line.

The script is a read-only consumer: every number it draws or annotates comes
from the files, nothing is recomputed.  The z range is clamped to the
theoretical range of the density ([0, 1/(2 pi)] for Husimi, [-1/pi, 1/pi]
for Wigner) so that panels of different states are visually comparable.

Usage:
    python3 render_grid.py GRID.csv MANIFEST.json --view bird --out panel.png
"""

import argparse
import csv
import json
import math
import sys

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


class SchemaError(RuntimeError):
    pass


WIGNER_RANGE = (-1 / math.pi, 1 / math.pi)
HUSIMI_RANGE = (0.0, 1 / (2 * math.pi))


def load_grid(csv_path, manifest_path):
    with open(manifest_path, encoding="utf-8") as fh:
        manifest = json.load(fh)
    if manifest.get("kind") != "grid":
        raise SchemaError(f"{manifest_path}: not a grid manifest")
    for key in ("nq", "np", "which", "q_min", "q_max", "p_min", "p_max"):
        if key not in manifest:
            raise SchemaError(f"{manifest_path}: missing {key!r}")
    with open(csv_path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != ["q", "p", "value"]:
        raise SchemaError(f"{csv_path}: expected header q,p,value")
    body = rows[1:]
    nq, npts = manifest["nq"], manifest["np"]
    if len(body) != nq * npts:
        raise SchemaError(f"{csv_path}: {len(body)} rows, manifest says {nq}*{npts}")
    values = np.array([float(r[2]) for r in body]).reshape(nq, npts)
    return manifest, values


def render_grid(csv_path, manifest_path, view="bird", out_image=None):
    """Draw the surface; returns (figure, stats) where stats echoes the
    manifest annotations used."""
    manifest, values = load_grid(csv_path, manifest_path)
    lo, hi = HUSIMI_RANGE if manifest["which"] == "husimi" else WIGNER_RANGE
    qs = np.linspace(manifest["q_min"], manifest["q_max"], manifest["nq"])
    ps = np.linspace(manifest["p_min"], manifest["p_max"], manifest["np"])
    QQ, PP = np.meshgrid(qs, ps, indexing="ij")

    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(111, projection="3d")
    norm = plt.Normalize(vmin=lo, vmax=hi)
    cmap = plt.get_cmap("RdBu_r" if manifest["which"] == "wigner" else "viridis")
    surf = ax.plot_surface(QQ, PP, values, facecolors=cmap(norm(values)),
                           rstride=1, cstride=1, linewidth=0, antialiased=False, shade=False)
    ax.set_zlim(lo, hi)
    ax.set_xlabel("q")
    ax.set_ylabel("p")
    if view == "bird":
        ax.view_init(elev=80, azim=-90)
    elif view == "frog":
        ax.view_init(elev=8, azim=-60)
    else:
        raise SchemaError(f"unknown view {view!r}")
    par = manifest["params"]
    ax.set_title(f"{manifest['which']}  n={par['n']}  "
                 f"zeta={par['zeta_re']:+.3f}{par['zeta_im']:+.3f}i   "
                 f"max={manifest['value_max']:.5f}")
    mappable = plt.cm.ScalarMappable(norm=norm, cmap=cmap)
    fig.colorbar(mappable, ax=ax, shrink=0.6)
    if out_image:
        fig.savefig(out_image, dpi=110)
    stats = {
        "value_min": float(values.min()),
        "value_max": float(values.max()),
        "clamp": (lo, hi),
        "colorbar_spans_negative": lo < 0,
        "annotated_max": manifest["value_max"],
    }
    return fig, stats


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("csv_path")
    ap.add_argument("manifest_path")
    ap.add_argument("--view", choices=("bird", "frog"), default="bird")
    ap.add_argument("--out", required=True)
    args = ap.parse_args(argv)
    try:
        fig, _ = render_grid(args.csv_path, args.manifest_path, args.view, args.out)
    except (SchemaError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    plt.close(fig)
    return 0


if __name__ == "__main__":
    sys.exit(main())
