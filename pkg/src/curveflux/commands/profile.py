"""
Profile command - tabulate estimators along the channel
"""
import click
import numpy as np

from ..core.channel import check_validity, sigma
from ..core.estimators import profile as sample_profile
from ..core.experiment import build_channel, load_config
from ..utils.formatting import write_csv
from .common import exit_on_error


@click.command("profile")
@click.argument("config", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", "-o", type=click.Path(dir_okay=False), help="Override output.profile")
@click.pass_context
def profile(ctx, config, output):
    """Write D(u) for every configured method to a CSV file"""
    log = ctx.obj['LOGGER']
    log.debug(f"Profile called with config={config}, output={output}")

    with exit_on_error(ctx):
        experiment = load_config(config)
        spec = build_channel(experiment)
        check_validity(spec)
        n = experiment.grid.n_profile
        columns = []
        for method in experiment.methods:
            result = sample_profile(spec, method, n=n, on_error="nan")
            failed = int(np.sum(~np.isfinite(result.D)))
            if failed:
                log.warning(f"{method.value}: {failed} of {n} samples failed")
            columns.append(result.D)

        u = np.linspace(spec.u1, spec.u2, n)
        rows = zip(u, sigma(spec, u), *columns)
        header = ["u", "sigma"] + [m.value for m in experiment.methods]
        path = write_csv(output or experiment.output.profile, header, rows)
        log.info(f"Wrote {n} rows to {path}")
