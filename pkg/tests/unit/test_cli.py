"""
Tests for the command line interface
"""
import csv
import math

import pytest
from click.testing import CliRunner

from curveflux.cli import cli
from curveflux.core.errors import SolverError


@pytest.fixture
def runner():
    return CliRunner()


def _read(path):
    with open(path, newline="") as handle:
        return list(csv.reader(handle))


def test_help_documents_schema(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for key in ("base_curve.type", "grid.nv", "CURVEFLUX_THREADS", "sweep.k"):
        assert key in result.output


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "0.3.0" in result.output


class TestProfile:
    def test_strip(self, runner, fixtures_dir, tmp_path):
        out = tmp_path / "profile.csv"
        result = runner.invoke(cli, ["profile", str(fixtures_dir / "strip.toml"), "-o", str(out)])
        assert result.exit_code == 0, result.output
        rows = _read(out)
        assert rows[0] == ["u", "sigma", "Zeroth", "Linear", "Quadratic", "Zwanzig", "Bradley",
                           "RegueraRubi", "KalinayPercus", "DagdugPineda"]
        assert len(rows) == 12
        for row in rows[1:]:
            assert float(row[1]) == 2.0
            for value in row[2:]:
                assert float(value) == pytest.approx(1.5, rel=1e-4)

    def test_annulus(self, runner, fixtures_dir, tmp_path):
        out = tmp_path / "profile.csv"
        result = runner.invoke(cli, ["profile", str(fixtures_dir / "annulus.toml"), "-o", str(out)])
        assert result.exit_code == 0, result.output
        rows = _read(out)
        assert rows[0] == ["u", "sigma", "Zeroth", "Quadratic"]
        for row in rows[1:]:
            assert float(row[2]) == pytest.approx(math.log(3), rel=1e-12)
            assert float(row[3]) == pytest.approx(math.log(3), rel=1e-9)

    def test_thread_count_does_not_change_output(self, runner, fixtures_dir, tmp_path, monkeypatch):
        outputs = []
        for threads in ("1", "8"):
            monkeypatch.setenv("CURVEFLUX_THREADS", threads)
            out = tmp_path / f"profile-{threads}.csv"
            result = runner.invoke(cli, ["profile", str(fixtures_dir / "wedge.toml"), "-o", str(out)])
            assert result.exit_code == 0, result.output
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_config_error_exit_code(self, runner, tmp_path):
        config = tmp_path / "bad.toml"
        config.write_text('[base_curve]\ntype = "line"\n')
        result = runner.invoke(cli, ["profile", str(config), "-o", str(tmp_path / "out.csv")])
        assert result.exit_code == 1
        assert not (tmp_path / "out.csv").exists()

    def test_syntax_error_exit_code(self, runner, tmp_path):
        config = tmp_path / "bad.toml"
        config.write_text("[base_curve\n")
        result = runner.invoke(cli, ["profile", str(config)])
        assert result.exit_code == 1

    def test_focal_point_exit_code(self, runner, fixtures_dir, tmp_path):
        out = tmp_path / "out.csv"
        result = runner.invoke(cli, ["profile", str(fixtures_dir / "focal.toml"), "-o", str(out)])
        assert result.exit_code == 2
        assert not out.exists()


class TestValidate:
    def test_annulus(self, runner, fixtures_dir, tmp_path):
        out = tmp_path / "compare.csv"
        result = runner.invoke(cli, ["validate", str(fixtures_dir / "annulus.toml"), "-o", str(out), "--table"])
        assert result.exit_code == 0, result.output
        rows = _read(out)
        assert rows[0] == ["method", "max_rel_err", "mean_rel_err", "flux_rel_err", "nu", "nv"]
        assert [row[0] for row in rows[1:]] == ["Zeroth", "Quadratic"]
        for row in rows[1:]:
            assert float(row[1]) < 1e-3
            assert float(row[3]) < 1e-3
            assert row[4:] == ["64", "17"]

    def test_thread_count_does_not_change_output(self, runner, fixtures_dir, tmp_path, monkeypatch):
        outputs = []
        for threads in ("1", "8"):
            monkeypatch.setenv("CURVEFLUX_THREADS", threads)
            out = tmp_path / f"compare-{threads}.csv"
            result = runner.invoke(cli, ["validate", str(fixtures_dir / "annulus.toml"), "-o", str(out)])
            assert result.exit_code == 0, result.output
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_focal_point_exit_code(self, runner, fixtures_dir, tmp_path):
        result = runner.invoke(cli, ["validate", str(fixtures_dir / "focal.toml"), "-o", str(tmp_path / "c.csv")])
        assert result.exit_code == 2

    def test_solver_failure(self, runner, fixtures_dir, tmp_path, mocker):
        failing = mocker.patch(
            "curveflux.commands.validate.compare",
            side_effect=SolverError("linear solve missed the residual tolerance", 1e-3),
        )
        out = tmp_path / "compare.csv"
        result = runner.invoke(cli, ["validate", str(fixtures_dir / "annulus.toml"), "-o", str(out)])
        assert result.exit_code == 2
        assert failing.call_args.kwargs["margin"] == 0.1
        assert not out.exists()


class TestSweep:
    def test_rows(self, runner, fixtures_dir, tmp_path):
        out = tmp_path / "sweep.csv"
        result = runner.invoke(cli, ["sweep-fig8", str(fixtures_dir / "sweep.toml"), "-o", str(out)])
        assert result.exit_code == 0, result.output
        rows = _read(out)
        assert rows[0] == ["k", "m1", "m2", "D"]
        assert len(rows) == 1 + 4 * 21 * 21
        assert any(row[3] == "inf" for row in rows[1:] if row[0] == "2.5")
        assert all(math.isfinite(float(row[3])) for row in rows[1:] if row[0] == "0.0")
