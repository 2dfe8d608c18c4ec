"""
Slope sweep command for the tangent-line example
"""
import math

import click

from ..core.estimators import sweep_example
from ..core.experiment import load_config
from ..utils.formatting import write_csv
from .common import exit_on_error


@click.command("sweep-fig8")
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Override output.sweep")
@click.pass_context
def sweep_fig8(ctx, config, output):
    """Tabulate D over a grid of wall slopes (m1, m2) for each base curvature k"""
    log = ctx.obj['LOGGER']
    log.debug(f"Sweep called with config={config}, output={output}")

    with exit_on_error(ctx):
        experiment = load_config(config)
        sweep = experiment.sweep
        rows = sweep_example(
            k_values=sweep.k,
            m1_range=(sweep.m1_min, sweep.m1_max),
            m2_range=(sweep.m2_min, sweep.m2_max),
            n=sweep.n,
            d0=experiment.d0,
        )
        for k in sweep.k:
            singular = sum(1 for row in rows if row.k == k and math.isinf(row.D))
            log.debug(f"k={k}: {singular} singular samples")
        path = write_csv(
            output or experiment.output.sweep,
            ["k", "m1", "m2", "D"],
            ([row.k, row.m1, row.m2, row.D] for row in rows),
        )
        log.info(f"Wrote {len(rows)} rows to {path}")
