"""
Formatting utilities for numeric tables and CSV output
"""
import csv
import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence, Union

from rich.console import Console
from rich.table import Table

from ..models.field import ComparisonReport


def format_number(value) -> str:
    """Shortest decimal that round-trips to the same float ('nan', 'inf' included)"""
    return repr(float(value))


def format_row(values: Iterable) -> list:
    return [value if isinstance(value, str) else format_number(value) for value in values]


def write_csv(path: Union[str, Path], header: Sequence[str], rows: Iterable[Iterable]) -> Path:
    """
    Write rows with LF line endings; the file appears only once complete
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow(format_row(row))
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path


def print_comparison(report: ComparisonReport, console: Console = None) -> None:
    """Render a comparison report as a table on stderr"""
    console = console or Console(stderr=True)
    table = Table(title=f"Estimators vs 2-D oracle ({report.nu}x{report.nv})")
    table.add_column("method")
    for name in ("max rel err", "mean rel err", "flux rel err"):
        table.add_column(name, justify="right")
    for row in report.rows:
        table.add_row(
            row.method.value,
            f"{row.max_rel_err:.3e}",
            f"{row.mean_rel_err:.3e}",
            f"{row.flux_rel_err:.3e}",
        )
    console.print(table)
