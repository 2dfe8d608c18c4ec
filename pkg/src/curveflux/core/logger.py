import logging

from rich.console import Console
from rich.logging import RichHandler


def get_logger(verbose: bool = False) -> logging.Logger:
    logger = logging.getLogger("curveflux")

    if not logger.hasHandlers():
        handler = RichHandler(
            console=Console(stderr=True),
            show_time=False,
            show_path=False,
            markup=False,
        )
        formatter = logging.Formatter('%(message)s')
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.propagate = False

    logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    return logger
