"""
Allow package to be run as: python -m curveflux
"""
from .cli import cli

if __name__ == '__main__':
    cli()
