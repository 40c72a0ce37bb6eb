"""Tests for the matrix file format, the command-line interface, and the
randomized near-optimality ensemble."""

import json

import numpy as np
import pytest

from srscale import io
from srscale.cli import main
from srscale.ensemble import run_ensemble, trial_rng
from srscale.errors import ParseError
from srscale.factor import symplectic_qr


def test_matrix_file_round_trip(tmp_path):
    rng = np.random.default_rng(211)
    path = tmp_path / "m.txt"
    for _ in range(20):
        m = rng.standard_normal((rng.integers(1, 7), rng.integers(1, 7)))
        m *= 10.0 ** rng.integers(-200, 201)
        io.write_matrix(path, m)
        back = io.read_matrix(path)
        np.testing.assert_array_equal(back, m)  # bit exact at 17 digits


def test_read_matrix_diagnostics(tmp_path):
    path = tmp_path / "bad.txt"

    path.write_text("")
    with pytest.raises(ParseError):
        io.read_matrix(path)

    path.write_text("2\n1 2\n3 4\n")
    with pytest.raises(ParseError) as err:
        io.read_matrix(path)
    assert err.value.line == 1

    path.write_text("2 2\n1 2\n3 oops\n")
    with pytest.raises(ParseError) as err:
        io.read_matrix(path)
    assert err.value.line == 3
    assert err.value.column == 2

    path.write_text("3 2\n1 2\n3 4\n")
    with pytest.raises(ParseError):
        io.read_matrix(path)


def test_cli_factor_writes_factors(tmp_path, capsys):
    rng = np.random.default_rng(223)
    g = rng.standard_normal((8, 4))
    src = tmp_path / "g.txt"
    io.write_matrix(src, g)
    s_out, r_out, p_out = (tmp_path / n for n in ("s.txt", "r.txt", "p.txt"))
    rc = main(["factor", str(src), "--s-out", str(s_out),
               "--r-out", str(r_out), "--perm-out", str(p_out)])
    assert rc == 0
    out = capsys.readouterr().out
    assert "reconstruction residual" in out
    s = io.read_matrix(s_out)
    r = io.read_matrix(r_out)
    perm = io.read_matrix(p_out).ravel().astype(int)
    np.testing.assert_allclose(s @ r, g[:, perm], atol=1e-10 * np.linalg.norm(g))


def test_cli_factor_odd_dimension_exits_2(tmp_path, capsys):
    src = tmp_path / "g.txt"
    io.write_matrix(src, np.ones((3, 3)))
    assert main(["factor", str(src)]) == 2


def test_cli_factor_missing_file_exits_2(tmp_path, capsys):
    assert main(["factor", str(tmp_path / "missing.txt")]) == 2


def test_cli_factor_parse_error_exits_2(tmp_path, capsys):
    src = tmp_path / "g.txt"
    src.write_text("2 2\n1 x\n3 4\n")
    assert main(["factor", str(src)]) == 2


def test_cli_factor_breakdown_exits_3(tmp_path, capsys):
    # columns spanning a Lagrangian subspace admit no pivot pair
    g = np.zeros((8, 4))
    g[:4, :] = np.random.default_rng(3).standard_normal((4, 4))
    src = tmp_path / "g.txt"
    io.write_matrix(src, g)
    assert main(["factor", str(src)]) == 3


def test_cli_scale_row_report(tmp_path, capsys):
    r = np.triu(np.arange(1.0, 37.0).reshape(6, 6)) + np.eye(6)
    src = tmp_path / "r.txt"
    io.write_matrix(src, r)
    json_path = tmp_path / "report.json"
    rc = main(["scale", str(src), "--side", "row", "--json", str(json_path)])
    assert rc == 0
    doc = json.loads(json_path.read_text())
    assert doc["side"] == "row"
    assert doc["kappa_after"] > 0
    assert len(doc["scaling_c"]) == 3
    # stdout carries the same document
    stdout_doc = json.loads(capsys.readouterr().out)
    assert stdout_doc == doc


def test_cli_scale_non_triangular_exits_2(tmp_path, capsys):
    src = tmp_path / "m.txt"
    io.write_matrix(src, np.random.default_rng(0).standard_normal((4, 4)))
    assert main(["scale", str(src), "--side", "row"]) == 2


def test_cli_scale_infeasible_target_exits_4(tmp_path, capsys):
    r = np.triu(np.arange(1.0, 37.0).reshape(6, 6)) + np.eye(6)
    src = tmp_path / "r.txt"
    io.write_matrix(src, r)
    assert main(["scale", str(src), "--side", "row", "--target", "1e-12"]) == 4


def test_cli_invalid_flag_exits_4(tmp_path):
    src = tmp_path / "m.txt"
    io.write_matrix(src, np.eye(4))
    with pytest.raises(SystemExit) as err:
        main(["scale", str(src), "--side", "diagonal"])
    assert err.value.code == 4
    with pytest.raises(SystemExit) as err:
        main(["example", "--id", "9.9"])
    assert err.value.code == 4


def test_cli_example_a_out_of_range_exits_4(capsys):
    assert main(["example", "--id", "6.1", "--a", "1.5"]) == 4


def test_cli_example_row_table(capsys):
    rc = main(["example", "--id", "6.2", "--a", "0.5"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    col = doc["columns"][0]
    np.testing.assert_allclose(col["kappa_before"], 5.5000e+01, rtol=1e-3)
    np.testing.assert_allclose(col["kappa_after"], 1.3521e+02, rtol=1e-3)


def test_cli_ensemble_deterministic(capsys):
    argv = ["ensemble", "--pairs", "2", "--trials", "3", "--samples", "5",
            "--seed", "7"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    doc = json.loads(first)
    assert doc["certificate_holds"]


def test_cli_ensemble_zero_trials_exits_4(capsys):
    assert main(["ensemble", "--trials", "0"]) == 4


def test_trial_rng_independent_of_order():
    a = trial_rng(3, 5).standard_normal(4)
    b = trial_rng(3, 5).standard_normal(4)
    np.testing.assert_array_equal(a, b)
    c = trial_rng(3, 6).standard_normal(4)
    assert np.any(a != c)


def test_run_ensemble_certificate_and_counts():
    summary = run_ensemble(n_pairs=2, trials=5, seed=1, samples=10)
    assert summary["certificate_holds"]
    assert 0.0 < summary["max_row_ratio"] <= 1.0
    assert 0.0 < summary["max_col_ratio"] <= 1.0
    assert summary["row_ratio_distribution"]["count"] == 50
    with pytest.raises(ValueError):
        run_ensemble(n_pairs=2, trials=0, seed=1)
