"""
curveflux - effective diffusion coefficients for channels over plane curves
"""

__version__ = "0.3.0"
__description__ = "Fick-Jacobs reduction over the normal bundle of a plane curve"

# Don't import cli here to avoid circular imports
