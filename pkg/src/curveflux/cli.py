#!/usr/bin/env python3
"""
curveflux CLI - Main entry point
"""
import click

from .core.config import VERSION
from .core.logger import get_logger

# Import all commands
from .commands.profile import profile
from .commands.sweep import sweep_fig8
from .commands.validate import validate


@click.group()
@click.version_option(version=VERSION)
@click.option("--verbose", is_flag=True, help="Enable verbose output")
@click.pass_context
def cli(ctx, verbose):
    """Effective diffusion coefficients for channels over plane curves.

    Every command reads one TOML experiment config. Keys (dotted form):

    \b
      base_curve.type       "line" | "circle" | "samples"        (required)
      base_curve.k          circle curvature, non-zero
      base_curve.center_re  circle focal point, real part         [0]
      base_curve.center_im  circle focal point, imaginary part    [0]
      base_curve.phase      circle phase in radians               [0]
      base_curve.angle      line direction angle in radians       [0]
      base_curve.origin_re  line point at u = 0, real part        [0]
      base_curve.origin_im  line point at u = 0, imaginary part   [0]
      base_curve.points     samples: ordered [[x, y], ...], >= 4
      v0.poly | v0.samples  middle offset, ascending coefficients
                            or uniform samples over the domain    [[0]]
      w.poly | w.samples    width, positive on the domain         (required)
      domain.u1, domain.u2  arc-length interval                   (required)
      d0                    bulk diffusion coefficient            [1]
      methods               Zeroth Linear Quadratic Zwanzig Bradley
                            RegueraRubi KalinayPercus DagdugPineda [Zeroth]
      grid.n_profile        profile rows                          [101]
      grid.nu, grid.nv      oracle grid, nv odd                   [256, 33]
      grid.margin           excluded end fraction for validate,
                            or a [left, right] pair               [0.1]
      output.profile        CSV written by profile                [profile.csv]
      output.compare        CSV written by validate               [compare.csv]
      output.sweep          CSV written by sweep-fig8             [sweep.csv]
      sweep.k               curvatures               [0, 0.2, 1.6, 2.5]
      sweep.m1_min, sweep.m1_max, sweep.m2_min, sweep.m2_max     [-1, 1]
      sweep.n               slopes per axis                       [21]

    \b
    CURVEFLUX_THREADS caps worker threads (default: all cores).
    Exit codes: 0 success, 1 config error, 2 numerical or validity error.
    """
    ctx.ensure_object(dict)
    ctx.obj['VERBOSE'] = verbose

    logger = get_logger(verbose)
    ctx.obj['LOGGER'] = logger

    logger.debug("Verbose mode is enabled.")


# Add all commands to the CLI group
cli.add_command(profile)
cli.add_command(validate)
cli.add_command(sweep_fig8)


if __name__ == '__main__':
    cli()
