"""Command-line interface: outputs, determinism, and exit codes.

Everything runs in-process through cli.main so the suite stays fast; the
console script is the same entry point.
"""

import json
import math

import pytest

from shellopt import (
    BangBangWeight,
    IntervalDomain,
    RobinProblem1D,
    ShellProblem,
    principal_eigenvalue,
    radial_principal_eigenvalue,
)
from shellopt.cli import main


def test_missing_required_flag_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["eigen", "--domain", "0", "1", "--beta", "1", "--set", "0.3", "0.6"])
    assert exc.value.code == 1


def test_eigen_interval_outputs(tmp_path):
    out = tmp_path / "run"
    code = main(
        [
            "eigen",
            "--domain", "0", "1",
            "--kappa", "1",
            "--beta", "0",
            "--set", "0", "0.25",
            "--out", str(out),
        ]
    )
    assert code == 0
    doc = json.loads((out / "eigenvalue.json").read_text())
    dom = IntervalDomain(0.0, 1.0)
    w = BangBangWeight(dom, 1.0, (IntervalDomain(0.0, 0.25),))
    direct = principal_eigenvalue(RobinProblem1D(dom, 0.0, 0.0, w)).lam
    assert doc["lambda"] == pytest.approx(direct, rel=1e-15)
    assert doc["zero_count"] == 0
    csv_text = (out / "eigenfunction.csv").read_text()
    assert csv_text.splitlines()[0] == "x,u"
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["command"] == "eigen"
    assert "timestamp" in manifest and "tool_version" in manifest
    assert set(manifest["outputs"]) == {"eigenvalue.json", "eigenfunction.csv"}


def test_eigen_shell_matches_direct_solver(tmp_path, capsys):
    out = tmp_path / "shell"
    code = main(
        [
            "eigen",
            "--shell", "2", "1", "2.718281828",
            "--kappa", "1",
            "--beta", "5",
            "--set", "1.3", "2.1",
            "--out", str(out),
        ]
    )
    assert code == 0
    doc = json.loads((out / "eigenvalue.json").read_text())
    sp = ShellProblem.make(2, 1.0, 2.718281828, 5.0, 1.0, 0.5, [(1.3, 2.1)])
    direct = radial_principal_eigenvalue(sp).lam
    assert doc["lambda"] == pytest.approx(direct, rel=1e-12)
    assert (out / "eigenfunction.csv").read_text().splitlines()[0] == "r,u"
    assert "lambda" in capsys.readouterr().out


def test_eigen_rejects_beta_right_on_shell(tmp_path):
    code_or_exc = None
    try:
        code_or_exc = main(
            [
                "eigen",
                "--shell", "2", "1", "2",
                "--kappa", "1",
                "--beta", "1",
                "--beta-right", "2",
                "--set", "1.2", "1.5",
                "--out", str(tmp_path / "x"),
            ]
        )
    except SystemExit as exc:
        code_or_exc = exc.code
    assert code_or_exc == 1


def test_eigen_reversed_set_is_usage_error(tmp_path):
    code = main(
        [
            "eigen",
            "--domain", "0", "1",
            "--kappa", "1",
            "--beta", "1",
            "--set", "0.6", "0.3",
            "--out", str(tmp_path / "x"),
        ]
    )
    assert code == 1


def test_deterministic_reruns(tmp_path):
    args = [
        "eigen",
        "--domain", "0", "1",
        "--kappa", "2",
        "--beta", "1.5",
        "--set", "0.2", "0.5",
    ]
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    for name in ("eigenvalue.json", "eigenfunction.csv"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    ma = json.loads((a / "manifest.json").read_text())
    mb = json.loads((b / "manifest.json").read_text())
    for m in (ma, mb):
        m.pop("timestamp")
        m["parameters"].pop("out")
    assert ma == mb


def test_threshold_stdout(capsys):
    code = main(["threshold", "--c", "0.5", "--kappa", "1"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["beta_star"] == pytest.approx(math.pi, rel=1e-15)
    assert doc["beta_star_scaled"] == doc["beta_star"]


def test_threshold_with_domain_and_out(tmp_path, capsys):
    out = tmp_path / "thr"
    code = main(["threshold", "--c", "0.5", "--kappa", "1", "--domain", "0", "2", "--out", str(out)])
    assert code == 0
    capsys.readouterr()
    doc = json.loads((out / "threshold.json").read_text())
    assert doc["beta_star_scaled"] == pytest.approx(math.pi / 2.0, rel=1e-15)
    assert (out / "manifest.json").exists()


def test_sweep_outputs(tmp_path, capsys):
    out = tmp_path / "sw"
    code = main(
        [
            "sweep",
            "--domain", "0", "1",
            "--kappa", "1",
            "--beta", "7",
            "--c", "0.5",
            "--grid", "11",
            "--out", str(out),
        ]
    )
    assert code == 0
    doc = json.loads((out / "sweep.json").read_text())
    assert doc["argmin_anchor"] == pytest.approx(0.25, abs=0.051)
    lines = (out / "sweep.csv").read_text().splitlines()
    assert lines[0] == "anchor_x,lambda"
    assert len(lines) == 12
    assert "argmin" in capsys.readouterr().out


def test_sweep_shell_anchor_header(tmp_path, capsys):
    out = tmp_path / "swr"
    code = main(
        [
            "sweep",
            "--shell", "2", "1", "2.718281828459045",
            "--kappa", "1",
            "--beta", "1",
            "--c", "0.4",
            "--grid", "7",
            "--out", str(out),
        ]
    )
    assert code == 0
    capsys.readouterr()
    lines = (out / "sweep.csv").read_text().splitlines()
    assert lines[0] == "anchor_t,lambda"


def test_plot_from_sweep_csv(tmp_path, capsys):
    sw = tmp_path / "sw"
    main(
        [
            "sweep",
            "--domain", "0", "1",
            "--kappa", "1",
            "--beta", "1",
            "--c", "0.3",
            "--grid", "9",
            "--out", str(sw),
        ]
    )
    capsys.readouterr()
    svg_path = tmp_path / "plot" / "sweep.svg"
    code = main(["plot", "--in", str(sw / "sweep.csv"), "--out", str(svg_path)])
    assert code == 0
    text = svg_path.read_text()
    assert text.startswith("<svg")
    assert 'width="800"' in text and 'height="600"' in text
    assert "polyline" in text
    assert (svg_path.parent / "manifest.json").exists()


def test_shell_report(tmp_path, capsys):
    code = main(
        [
            "shell",
            "--shell", "3", "1", "2",
            "--kappa", "1",
            "--m0", "0.5",
            "--beta", "10",
        ]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    red = doc["reduction"]
    assert red["q"] == pytest.approx(2.0 * red["q_lower_bound"], rel=1e-15)
    assert 0.0 < red["m0_prime"] < 1.0
    assert 0.0 < red["c_prime"] < 1.0
    assert set(doc["predictions"]) == {"Supercritical", "Subcritical", "Critical"}
    assert doc["threshold"]["beta_star_scaled"] > 0.0


def test_shell_q_too_small_is_computational_error(tmp_path, capsys):
    code = main(
        [
            "shell",
            "--shell", "2", "1", "2.718281828459045",
            "--kappa", "1",
            "--m0", "0.5",
            "--beta", "1",
            "--q", "0.1",
        ]
    )
    assert code == 2
    err = capsys.readouterr().err
    assert "QTooSmall" in err


def test_verify_single_suite(capsys):
    code = main(["verify", "--suite", "invariants"])
    assert code == 0
    out = capsys.readouterr().out
    assert "PASS invariants" in out


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "0.1.0" in capsys.readouterr().out
