"""
Validate command - compare estimators with the 2-D oracle
"""
import click

from ..core.experiment import build_channel, load_config
from ..core.oracle import compare
from ..utils.formatting import print_comparison, write_csv
from .common import exit_on_error


@click.command("validate")
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Override output.compare")
@click.option("--table/--no-table", default=False, help="Also print the errors as a table")
@click.pass_context
def validate(ctx, config, output, table):
    """Solve the steady 2-D problem and report each estimator's error"""
    log = ctx.obj['LOGGER']
    log.debug(f"Validate called with config={config}, output={output}")

    with exit_on_error(ctx):
        experiment = load_config(config)
        spec = build_channel(experiment)
        grid = experiment.grid
        report = compare(spec, experiment.methods, nu=grid.nu, nv=grid.nv, margin=grid.margin)

        rows = [
            [row.method.value, row.max_rel_err, row.mean_rel_err, row.flux_rel_err, str(report.nu), str(report.nv)]
            for row in report.rows
        ]
        header = ["method", "max_rel_err", "mean_rel_err", "flux_rel_err", "nu", "nv"]
        path = write_csv(output or experiment.output.compare, header, rows)
        if table:
            print_comparison(report)
        log.info(f"Wrote {len(rows)} rows to {path}")
