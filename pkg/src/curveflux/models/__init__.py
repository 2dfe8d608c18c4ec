"""
Data models for curves, channels and results
"""
from .channel import ChannelSpec, PolynomialProfile, SampledProfile, WallData
from .curve import Circle, FrenetFrame, Line, PlaneCurve, SampledArc
from .estimate import DiffusionProfile, EstimateDiagnostics, EstimatorMethod, SweepRow
from .field import ComparisonReport, Grid2D, MeasuredProfile, SteadyField
from .steiner import CirclePair, SteinerMap, SteinerMode

__all__ = [
    'ChannelSpec', 'PolynomialProfile', 'SampledProfile', 'WallData',
    'Circle', 'FrenetFrame', 'Line', 'PlaneCurve', 'SampledArc',
    'DiffusionProfile', 'EstimateDiagnostics', 'EstimatorMethod', 'SweepRow',
    'ComparisonReport', 'Grid2D', 'MeasuredProfile', 'SteadyField',
    'CirclePair', 'SteinerMap', 'SteinerMode',
]
