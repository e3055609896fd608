"""Command-line interface: file formats, exit codes, determinism, and the
validation subcommand (including a mutation smoke test)."""

import csv
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from sqstates import cli


def run_cli(args):
    return cli.main(list(args))


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], rows[1:]


# ---------------------------------------------------------------------------
# pdist
# ---------------------------------------------------------------------------

def test_pdist_displaced_coherent(tmp_path):
    out = tmp_path / "fig3.csv"
    assert run_cli(["pdist", "--beta", "3.53533", "--n", "0", "--zeta", "0",
                    "--out", str(out)]) == 0
    header, rows = read_csv(out)
    assert header == ["m", "p_m"]
    probs = np.array([float(r[1]) for r in rows])
    assert probs.sum() == pytest.approx(1.0, abs=1e-8)
    side = json.loads((tmp_path / "fig3.json").read_text())
    assert side["mean_photon"] == pytest.approx(3.53533**2, rel=1e-12)
    assert side["tail_mass"] < 1e-8
    # Poissonian column: p_m = e^-x x^m / m!
    x = 3.53533**2
    for m in (0, 5, 12):
        want = math.exp(-x + m * math.log(x) - math.lgamma(m + 1))
        assert probs[m] == pytest.approx(want, rel=1e-10)


def test_pdist_vacuum(tmp_path):
    out = tmp_path / "vac.csv"
    assert run_cli(["pdist", "--beta", "0", "--n", "0", "--zeta", "0", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert float(rows[0][1]) == 1.0


def test_pdist_excited_squeezed_sums_to_one(tmp_path):
    out = tmp_path / "fig8.csv"
    assert run_cli(["pdist", "--beta", "3.87298", "--n", "10", "--zeta", "0.6",
                    "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert sum(float(r[1]) for r in rows) == pytest.approx(1.0, abs=1e-8)


def test_pdist_cutoff_failure_exit_code(tmp_path):
    assert run_cli(["pdist", "--beta", "4", "--n", "0", "--zeta", "0",
                    "--cutoff", "5", "--out", str(tmp_path / "x.csv")]) == 3


def test_pdist_deterministic_output(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (a, b):
        run_cli(["pdist", "--beta-abs", "2.0", "--beta-arg", "0.5", "--n", "2",
                 "--zeta-abs", "0.4", "--zeta-arg", "1.2", "--out", str(out)])
    assert a.read_bytes() == b.read_bytes()
    assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()


def test_outdir_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.OUTDIR_ENV, str(tmp_path))
    assert run_cli(["pdist", "--beta", "1", "--n", "0", "--zeta", "0", "--out", "env.csv"]) == 0
    assert (tmp_path / "env.csv").exists()
    assert (tmp_path / "env.json").exists()


# ---------------------------------------------------------------------------
# grid
# ---------------------------------------------------------------------------

def test_grid_husimi_bound(tmp_path):
    out = tmp_path / "fig1.csv"
    assert run_cli(["grid", "--which", "husimi", "--beta", "0", "--n", "3",
                    "--zeta", "0.381966", "--qrange", "-4", "4", "--prange", "-4", "4",
                    "--nq", "41", "--np", "41", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    vals = np.array([float(r[2]) for r in rows])
    assert vals.max() <= 1 / (2 * math.pi) + 1e-9
    assert vals.min() >= 0
    manifest = json.loads((tmp_path / "fig1.json").read_text())
    assert manifest["nq"] == 41 and manifest["np"] == 41
    assert manifest["value_max"] == pytest.approx(vals.max())
    assert "row-major" in manifest["ordering"]


def test_grid_wigner_negative_region(tmp_path):
    out = tmp_path / "w1.csv"
    assert run_cli(["grid", "--which", "wigner", "--beta", "0", "--n", "1",
                    "--zeta-abs", "0.381966", "--qrange", "-3", "3", "--prange", "-3", "3",
                    "--nq", "31", "--np", "31", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    vals = np.array([float(r[2]) for r in rows])
    assert vals.min() == pytest.approx(-1 / math.pi, rel=1e-10)


def test_grid_single_point(tmp_path):
    out = tmp_path / "one.csv"
    assert run_cli(["grid", "--which", "wigner", "--beta", "0", "--n", "0", "--zeta", "0",
                    "--qrange", "-0.000000001", "0.000000001",
                    "--prange", "-0.000000001", "0.000000001",
                    "--nq", "1", "--np", "1", "--out", str(out)]) == 0
    _, rows = read_csv(out)
    assert len(rows) == 1
    assert float(rows[0][2]) == pytest.approx(1 / math.pi, rel=1e-9)


def test_grid_rows_follow_documented_ordering(tmp_path):
    out = tmp_path / "ord.csv"
    run_cli(["grid", "--which", "husimi", "--beta", "0.5", "--n", "0", "--zeta", "0",
             "--qrange", "0", "1", "--prange", "0", "2", "--nq", "2", "--np", "3",
             "--out", str(out)])
    _, rows = read_csv(out)
    qs = [float(r[0]) for r in rows]
    ps = [float(r[1]) for r in rows]
    assert qs == [0, 0, 0, 1, 1, 1]
    assert ps == [0, 1, 2, 0, 1, 2]


# ---------------------------------------------------------------------------
# moments / overlap
# ---------------------------------------------------------------------------

def test_moments_vacuum_json(capsys):
    assert run_cli(["moments", "--beta", "0", "--n", "0", "--zeta", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["var_q"] == pytest.approx(0.5)
    assert out["var_p"] == pytest.approx(0.5)
    assert out["unc_sum"] == pytest.approx(1.0)


def test_moments_uncertainty_sum_value(capsys):
    za = math.sqrt(0.5)
    assert run_cli(["moments", "--beta", "0", "--n", "1", "--zeta-abs", str(za)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["unc_sum"] == pytest.approx(9.0, rel=1e-10)


def test_moments_coherent_mean(capsys):
    assert run_cli(["moments", "--beta", "5", "--n", "0", "--zeta", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["mean_n"] == pytest.approx(25.0)


def test_moments_rejects_unnormalizable(capsys):
    assert run_cli(["moments", "--beta", "0", "--n", "0", "--zeta", "1.2"]) == 3


def test_overlap_biorthogonal_pair(capsys):
    assert run_cli(["overlap", "--bra-alpha", "1+2i", "--bra-n", "3",
                    "--bra-xi-abs", "0.5", "--bra-xi-arg", str(math.pi),
                    "--beta", "1+2i", "--n", "3", "--zeta", "0.5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["re"] == pytest.approx(1.0, abs=1e-11)
    assert out["im"] == pytest.approx(0.0, abs=1e-11)


def test_overlap_odd_difference(capsys):
    assert run_cli(["overlap", "--bra-alpha", "0.3", "--bra-n", "2", "--bra-xi", "0.1",
                    "--beta", "0.3", "--n", "1", "--zeta", "0.4"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert abs(complex(out["re"], out["im"])) < 1e-12


def test_overlap_against_oracle(capsys):
    from sqstates import oracle as orc
    from sqstates.states import StateLabel

    assert run_cli(["overlap", "--bra-alpha", "0.3", "--bra-n", "2", "--bra-xi", "0.2i",
                    "--beta", "1-0.4i", "--n", "3", "--zeta", "0.5"]) == 0
    out = json.loads(capsys.readouterr().out)
    sa = orc.build_state(StateLabel(0.3, 2, 0.2j), 256)
    sb = orc.build_state(StateLabel(1 - 0.4j, 3, 0.5), 256)
    want = orc.oracle_overlap(sa, sb)
    assert complex(out["re"], out["im"]) == pytest.approx(want, abs=1e-9)


def test_overlap_singular_pair_exit(capsys):
    assert run_cli(["overlap", "--bra-alpha", "0", "--bra-n", "0", "--bra-xi", "1",
                    "--beta", "0", "--n", "0", "--zeta", "0.5"]) == 3


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------

def test_validate_identities(capsys):
    assert run_cli(["validate", "--suite", "identities"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    names = {c["name"] for c in report["checks"]}
    assert "jacobi_three_term_bridge" in names


def test_validate_oracle_seeded(capsys):
    assert run_cli(["validate", "--suite", "oracle", "--seed", "42"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["passed"]
    assert all(c["max_error"] <= c["tolerance"] for c in report["checks"])


def test_validate_detects_mutation(capsys, monkeypatch):
    # flip a sign in a closed form; the oracle suite must catch it
    import sqstates.overlaps as ovmod

    original = ovmod.overlap
    monkeypatch.setattr(ovmod, "overlap", lambda a, b: -original(a, b))
    assert run_cli(["validate", "--suite", "all", "--seed", "1"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert not report["passed"]


def test_validate_deterministic_for_fixed_seed(capsys):
    run_cli(["validate", "--suite", "identities", "--seed", "3"])
    first = capsys.readouterr().out
    run_cli(["validate", "--suite", "identities", "--seed", "3"])
    assert capsys.readouterr().out == first


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "sqstates", "pdist", "--nonsense"],
                          capture_output=True)
    assert proc.returncode == 2


def test_console_entry_point_runs():
    proc = subprocess.run([sys.executable, "-m", "sqstates", "moments", "--beta", "1"],
                          capture_output=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["mean_n"] == pytest.approx(1.0)


def test_complex_flag_parsing():
    assert cli.parse_complex("1+2i") == 1 + 2j
    assert cli.parse_complex("-0.5i") == -0.5j
    assert cli.parse_complex("3") == 3 + 0j
    with pytest.raises(Exception):
        cli.parse_complex("one")
