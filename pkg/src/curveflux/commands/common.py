"""
Shared plumbing for the experiment commands
"""
from contextlib import contextmanager

import click

from ..core.errors import CurveFluxError


@contextmanager
def exit_on_error(ctx: click.Context):
    """Log a CurveFluxError and exit with its code instead of a traceback"""
    try:
        yield
    except CurveFluxError as exc:
        ctx.obj['LOGGER'].error(str(exc))
        ctx.exit(exc.exit_code)
