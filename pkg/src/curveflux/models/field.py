"""
Computational grid, steady 2-D fields and oracle comparison results
"""
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from .estimate import EstimatorMethod


@dataclass
class Grid2D:
    """
    Uniform (u, v) grid with the pullback metric of phi at every node.

    Arrays are indexed [i, j] with i along u and j along v.
    """
    u: np.ndarray
    v: np.ndarray
    g_uu: np.ndarray
    g_uv: np.ndarray
    g_vv: np.ndarray

    @property
    def nu(self) -> int:
        return self.u.size

    @property
    def nv(self) -> int:
        return self.v.size

    @property
    def shape(self):
        return (self.nu, self.nv)

    @property
    def hu(self) -> float:
        return float(self.u[1] - self.u[0])

    @property
    def hv(self) -> float:
        return float(self.v[1] - self.v[0])

    @property
    def sqrt_det(self) -> np.ndarray:
        """(1 - s k)(w / 2) at every node"""
        return np.sqrt(self.g_uu * self.g_vv - self.g_uv ** 2)


@dataclass
class SteadyField:
    grid: Grid2D
    P: np.ndarray
    p_left: float = 0.0
    p_right: float = 1.0
    p: Optional[np.ndarray] = None
    j: Optional[np.ndarray] = None
    residual: float = 0.0
    max_principle_excess: float = 0.0
    solver: str = "lu"


@dataclass
class MeasuredProfile:
    """D measured from a steady field; NaN where d(p/sigma)/du vanishes"""
    u: np.ndarray
    D: np.ndarray

    @property
    def indeterminate(self) -> np.ndarray:
        return ~np.isfinite(self.D)


@dataclass
class MethodComparison:
    method: EstimatorMethod
    max_rel_err: float
    mean_rel_err: float
    flux_rel_err: float


@dataclass
class ComparisonReport:
    nu: int
    nv: int
    j_oracle: float
    rows: List[MethodComparison] = field(default_factory=list)
