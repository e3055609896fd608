"""Produce the standard survey of figures from scratch.

Drives the sqstates command line (as a subprocess, through its public flags
and file formats only) to generate the grid/distribution CSVs for the usual
parameter sets, then renders them:

  * Husimi and Wigner panels for n = 0..5 at zeta = 0.381966 (bird / frog),
  * displaced-Fock distributions at beta = 3.53533 for n = 0..5 and 5..10,
  * squeezing sweeps of the distribution at beta = 5 (n = 0) and
    beta = 3.87298 (n = 10), each for both signs of real zeta.

Usage:  python3 make_survey.py [--outdir survey_output] [--fast]
"""

import argparse
import pathlib
import subprocess
import sys

from render_grid import render_grid
from render_pdist import render_pdist

import matplotlib.pyplot as plt

ZETA_STAR = 0.381966


def cli(*args):
    cmd = [sys.executable, "-m", "sqstates", *map(str, args)]
    subprocess.run(cmd, check=True)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="survey_output")
    ap.add_argument("--fast", action="store_true",
                    help="smaller grids and shorter sweeps")
    args = ap.parse_args(argv)
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    ngrid = 41 if args.fast else 101
    reach = 4.5

    # phase-space panels, n = 0..5
    for which, view, tag in (("husimi", "bird", "panelQ"), ("wigner", "frog", "panelW")):
        for n in range(6):
            base = out / f"{tag}_n{n}"
            cli("grid", "--which", which, "--n", n, "--zeta", ZETA_STAR,
                "--qrange", -reach, reach, "--prange", -reach, reach,
                "--nq", ngrid, "--np", ngrid, "--out", f"{base}.csv")
            fig, _ = render_grid(f"{base}.csv", f"{base}.json", view, f"{base}.png")
            plt.close(fig)
            print(f"rendered {base}.png")

    # displaced-Fock distributions, two n windows
    for tag, ns in (("fockA", range(0, 6)), ("fockB", range(5, 11))):
        paths = []
        for n in ns:
            base = out / f"{tag}_n{n}"
            cli("pdist", "--beta", 3.53533, "--n", n, "--zeta", 0, "--out", f"{base}.csv")
            paths.append(f"{base}.csv")
        fig, _ = render_pdist(paths, out / f"{tag}.png")
        plt.close(fig)
        print(f"rendered {out / (tag + '.png')}")

    # squeezing sweeps (both orientations of real zeta)
    sweeps = [
        ("sweep_b5_perp", 5.0, 0, [0.0, 0.25, 0.5, 0.75, 0.9]),
        ("sweep_b5_perp_zoom", 5.0, 0, [0.75, 0.8, 0.85, 0.9, 0.95]),
        ("sweep_b5_para", 5.0, 0, [0.0, -0.25, -0.5, -0.75, -0.9]),
        ("sweep_b387_n10_perp", 3.87298, 10, [0.0, 0.25, 0.5, 0.75]),
        ("sweep_b387_n10_para", 3.87298, 10, [0.0, -0.25, -0.5, -0.75]),
    ]
    if args.fast:
        sweeps = [(t, b, n, zs[::2]) for t, b, n, zs in sweeps]
    for tag, beta, n, zetas in sweeps:
        paths = []
        for k, z in enumerate(zetas):
            base = out / f"{tag}_{k}"
            cli("pdist", "--beta", beta, "--n", n, "--zeta", z, "--out", f"{base}.csv")
            paths.append(f"{base}.csv")
        fig, _ = render_pdist(paths, out / f"{tag}.png")
        plt.close(fig)
        print(f"rendered {out / (tag + '.png')}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
