"""
Estimator tags and their results
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

import numpy as np

from .steiner import SteinerMap


class EstimatorMethod(str, Enum):
    ZEROTH = "Zeroth"
    LINEAR = "Linear"
    QUADRATIC = "Quadratic"
    ZWANZIG = "Zwanzig"
    BRADLEY = "Bradley"
    REGUERA_RUBI = "RegueraRubi"
    KALINAY_PERCUS = "KalinayPercus"
    DAGDUG_PINEDA = "DagdugPineda"

    @property
    def is_baseline(self) -> bool:
        """Straight-line formulas that only make sense for k = 0"""
        return self in BASELINES


BASELINES = frozenset({
    EstimatorMethod.ZWANZIG,
    EstimatorMethod.BRADLEY,
    EstimatorMethod.REGUERA_RUBI,
    EstimatorMethod.KALINAY_PERCUS,
    EstimatorMethod.DAGDUG_PINEDA,
})


@dataclass
class EstimateDiagnostics:
    """Intermediates of the master formula D = D0 Im(D1) / Re(D2)"""
    D1: complex = complex("nan+nanj")
    D2: complex = complex("nan+nanj")
    rho: Optional[complex] = None
    p: Optional[complex] = None
    steiner: Optional[SteinerMap] = None
    d2_published: Optional[complex] = None
    branch_flags: List[str] = field(default_factory=list)

    def flag(self, name: str) -> None:
        if name not in self.branch_flags:
            self.branch_flags.append(name)


@dataclass
class DiffusionProfile:
    """D sampled on a uniform u-grid by one estimator"""
    u: np.ndarray
    D: np.ndarray
    method: EstimatorMethod
    diagnostics: List[Optional[EstimateDiagnostics]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.u)

    @property
    def finite(self) -> bool:
        return bool(np.all(np.isfinite(self.D)))


@dataclass(frozen=True)
class SweepRow:
    """One sample of the slope sweep; D is inf at singular configurations"""
    k: float
    m1: float
    m2: float
    D: float
