"""
Tests for number formatting and CSV output
"""
import math

import pytest
from rich.console import Console

from curveflux.models import EstimatorMethod
from curveflux.models.field import ComparisonReport, MethodComparison
from curveflux.utils.formatting import format_number, format_row, print_comparison, write_csv


class TestFormatNumber:
    @pytest.mark.parametrize("value", [0.1, 1 / 3, math.log(3), 1e-300, -2.5e17])
    def test_round_trips(self, value):
        assert float(format_number(value)) == value

    def test_special_values(self):
        assert format_number(math.nan) == "nan"
        assert format_number(math.inf) == "inf"
        assert format_number(-math.inf) == "-inf"

    def test_row_keeps_strings(self):
        assert format_row(["Zeroth", 0.5, "17"]) == ["Zeroth", "0.5", "17"]


class TestWriteCsv:
    def test_lf_line_endings(self, tmp_path):
        path = write_csv(tmp_path / "out.csv", ["u", "D"], [[0.0, 1.0], [0.5, math.inf]])
        assert path.read_bytes() == b"u,D\n0.0,1.0\n0.5,inf\n"

    def test_creates_parent_directory(self, tmp_path):
        path = write_csv(tmp_path / "nested" / "out.csv", ["u"], [[1.0]])
        assert path.exists()

    def test_failure_leaves_previous_file(self, tmp_path):
        target = tmp_path / "out.csv"
        target.write_text("previous\n")

        def rows():
            yield [1.0]
            raise RuntimeError("interrupted")

        with pytest.raises(RuntimeError):
            write_csv(target, ["u"], rows())
        assert target.read_text() == "previous\n"
        assert sorted(p.name for p in tmp_path.iterdir()) == ["out.csv"]


def test_print_comparison():
    report = ComparisonReport(nu=64, nv=17, j_oracle=-1.0)
    report.rows.append(MethodComparison(EstimatorMethod.ZEROTH, 1e-3, 5e-4, 2e-4))
    console = Console(record=True, width=120)
    print_comparison(report, console)
    text = console.export_text()
    assert "Zeroth" in text
    assert "1.000e-03" in text
    assert "64x17" in text
