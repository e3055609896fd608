"""Command-line interface.

Subcommands: ``pdist`` (photon distribution to CSV + JSON sidecar), ``grid``
(Wigner/Husimi phase-space grid to CSV + JSON manifest), ``moments`` (JSON to
stdout), ``overlap`` (JSON to stdout), ``validate`` (self-check suites).

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 domain or
cutoff error.  All numbers are serialized with 17 significant digits and the
output is byte-identical for identical flags (and seed).  Relative output
paths are resolved against $SQSTATES_OUTDIR when that variable is set.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from ._errors import CutoffError, SingularPairError, SqueezeParameterError
from .overlaps import overlap
from .photonstats import mean_photon, moments, photon_distribution
from .quasiprob import grid_eval
from .states import StateLabel
from .validate import run_suite

OUTDIR_ENV = "SQSTATES_OUTDIR"


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def parse_complex(text: str) -> complex:
    """Accept '1.5', '2i', '0.3-0.4i' (or the j spelling)."""
    try:
        return complex(text.strip().replace(" ", "").replace("i", "j"))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"cannot parse complex number {text!r}") from exc


def _resolve_out(path: str) -> str:
    base = os.environ.get(OUTDIR_ENV)
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _sidecar(path: str) -> str:
    root, ext = os.path.splitext(path)
    return root + ".json" if ext == ".csv" else path + ".json"


def _add_state_flags(p, prefix="", zeta_name="zeta", beta_name="beta"):
    p.add_argument(f"--{prefix}{beta_name}", type=parse_complex, default=None,
                   help="displacement as a complex 'a+bi' (default 0)")
    p.add_argument(f"--{prefix}{beta_name}-abs", type=float, default=None)
    p.add_argument(f"--{prefix}{beta_name}-arg", type=float, default=None,
                   help="displacement in modulus/phase form")
    p.add_argument(f"--{prefix}n", type=int, default=0, help="excitation number (default 0)")
    p.add_argument(f"--{prefix}{zeta_name}", type=parse_complex, default=None,
                   help="squeezing as a complex 'a+bi' (default 0)")
    p.add_argument(f"--{prefix}{zeta_name}-abs", type=float, default=None)
    p.add_argument(f"--{prefix}{zeta_name}-arg", type=float, default=None,
                   help="squeezing in modulus/phase form (the primary spelling)")


def _pick_complex(parser, args, name: str, default=0j) -> complex:
    direct = getattr(args, name)
    mod = getattr(args, f"{name}_abs")
    arg = getattr(args, f"{name}_arg")
    if direct is not None and (mod is not None or arg is not None):
        parser.error(f"--{name} conflicts with --{name}-abs/--{name}-arg")
    if direct is not None:
        return direct
    if mod is not None:
        return mod * complex(math.cos(arg or 0.0), math.sin(arg or 0.0))
    if arg is not None:
        parser.error(f"--{name}-arg needs --{name}-abs")
    return default


def _state_from_args(parser, args, prefix="", zeta_name="zeta", beta_name="beta") -> StateLabel:
    pre = prefix.replace("-", "_")
    beta = _pick_complex(parser, args, f"{pre}{beta_name}")
    zeta = _pick_complex(parser, args, f"{pre}{zeta_name}")
    return StateLabel(beta, getattr(args, f"{pre}n"), zeta, getattr(args, "hbar", 1.0))


def _write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_json(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(obj, indent=2, sort_keys=True))
        fh.write("\n")


def _params_echo(label: StateLabel) -> dict:
    return {
        "beta_re": float(label.beta.real),
        "beta_im": float(label.beta.imag),
        "n": label.n,
        "zeta_re": float(label.zeta.real),
        "zeta_im": float(label.zeta.imag),
        "hbar": label.hbar,
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_pdist(parser, args) -> int:
    label = _state_from_args(parser, args)
    dist = photon_distribution(label, args.cutoff)
    out = _resolve_out(args.out)
    _write_csv(out, ["m", "p_m"],
               [[m, fmt(pm_val)] for m, pm_val in enumerate(dist.probs)])
    _write_json(_sidecar(out), {
        "params": _params_echo(label),
        "cutoff": dist.cutoff,
        "tail_mass": float(dist.tail_mass),
        "mean_photon": float(mean_photon(label)),
        "kind": "pdist",
    })
    return 0


def cmd_grid(parser, args) -> int:
    label = _state_from_args(parser, args)
    g = grid_eval(label, args.which, args.qrange[0], args.qrange[1],
                  args.prange[0], args.prange[1], args.nq, args.np)
    out = _resolve_out(args.out)
    rows = []
    qs, ps_axis = g.q_axis(), g.p_axis()
    for iq in range(g.nq):
        for ip in range(g.np):
            rows.append([fmt(qs[iq]), fmt(ps_axis[ip]), fmt(g.values[iq * g.np + ip])])
    _write_csv(out, ["q", "p", "value"], rows)
    _write_json(_sidecar(out), {
        "params": _params_echo(label),
        "which": args.which,
        "q_min": g.q_min, "q_max": g.q_max, "p_min": g.p_min, "p_max": g.p_max,
        "nq": g.nq, "np": g.np,
        "ordering": "row-major in q (flat index = iq*np + ip)",
        "value_min": float(g.values.min()),
        "value_max": float(g.values.max()),
        "kind": "grid",
    })
    return 0


def cmd_moments(parser, args) -> int:
    label = _state_from_args(parser, args)
    rep = moments(label)
    out = {
        "mean_a_re": rep.mean_a.real, "mean_a_im": rep.mean_a.imag,
        "mean_adag_re": rep.mean_adag.real, "mean_adag_im": rep.mean_adag.imag,
        "mean_a2_re": rep.mean_a2.real, "mean_a2_im": rep.mean_a2.imag,
        "mean_n": rep.mean_n,
        "var_q": rep.var_q, "var_p": rep.var_p,
        "cov_qp_sym": rep.cov_qp_sym,
        "unc_sum": rep.unc_sum, "unc_prod": rep.unc_prod,
        "params": _params_echo(label),
    }
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def cmd_overlap(parser, args) -> int:
    bra = _state_from_args(parser, args, prefix="bra-", zeta_name="xi", beta_name="alpha")
    ket = _state_from_args(parser, args)
    val = overlap(bra, ket)
    json.dump({"re": val.real, "im": val.imag}, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0


def cmd_validate(parser, args) -> int:
    report = run_suite(args.suite, args.seed)
    json.dump(report, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")
    return 0 if report["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sqstates",
        description="Closed-form numerics for displaced squeezed-vacuum excitations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pdist", help="photon-number distribution to CSV + JSON sidecar")
    _add_state_flags(p)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--cutoff", type=int, default=None,
                   help="largest photon number (default: grown automatically)")
    p.add_argument("--out", default="pdist.csv", help="CSV output path")
    p.set_defaults(func=cmd_pdist)

    p = sub.add_parser("grid", help="Wigner or Husimi samples on a (q,p) grid")
    _add_state_flags(p)
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--which", choices=("wigner", "husimi"), required=True)
    p.add_argument("--qrange", type=float, nargs=2, required=True, metavar=("QMIN", "QMAX"))
    p.add_argument("--prange", type=float, nargs=2, required=True, metavar=("PMIN", "PMAX"))
    p.add_argument("--nq", type=int, required=True)
    p.add_argument("--np", type=int, required=True)
    p.add_argument("--out", default="grid.csv", help="CSV output path")
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("moments", help="closed-form moment report as JSON on stdout")
    _add_state_flags(p)
    p.add_argument("--hbar", type=float, default=1.0)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("overlap", help="scalar product <bra|ket> as JSON on stdout")
    _add_state_flags(p, prefix="bra-", zeta_name="xi", beta_name="alpha")
    _add_state_flags(p)
    p.add_argument("--hbar", type=float, default=1.0)
    p.set_defaults(func=cmd_overlap)

    p = sub.add_parser("validate", help="run the identity / oracle validation suites")
    p.add_argument("--suite", choices=("identities", "oracle", "all"), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except (SqueezeParameterError, SingularPairError, CutoffError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
