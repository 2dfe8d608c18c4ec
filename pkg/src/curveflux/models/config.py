"""
Experiment configuration schema
"""
from typing import List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.config import (
    DEFAULT_COMPARE_CSV,
    DEFAULT_N_PROFILE,
    DEFAULT_NU,
    DEFAULT_NV,
    DEFAULT_PROFILE_CSV,
    DEFAULT_SWEEP_CSV,
    DEFAULT_SWEEP_K,
    DEFAULT_SWEEP_N,
    DEFAULT_SWEEP_RANGE,
    MEASURE_MARGIN,
)
from .estimate import EstimatorMethod


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class BaseCurveConfig(_Section):
    type: Literal["line", "circle", "samples"]
    # circle
    k: Optional[float] = None
    center_re: float = 0.0
    center_im: float = 0.0
    phase: float = 0.0
    # line
    angle: float = 0.0
    origin_re: float = 0.0
    origin_im: float = 0.0
    # samples, ordered [x, y] pairs
    points: Optional[List[Tuple[float, float]]] = None


class FunctionConfig(_Section):
    """Polynomial coefficients (ascending) or uniform samples over the domain"""
    poly: Optional[List[float]] = None
    samples: Optional[List[float]] = None

    @model_validator(mode="after")
    def _one_source(self):
        if (self.poly is None) == (self.samples is None):
            raise ValueError("give exactly one of 'poly' or 'samples'")
        return self


class DomainConfig(_Section):
    u1: float
    u2: float


class GridConfig(_Section):
    n_profile: int = Field(DEFAULT_N_PROFILE, ge=2)
    nu: int = Field(DEFAULT_NU, ge=16)
    nv: int = Field(DEFAULT_NV, ge=9)
    # excluded end fraction, the same at both ends or a [left, right] pair
    margin: Union[float, Tuple[float, float]] = MEASURE_MARGIN

    @field_validator("margin")
    @classmethod
    def _margin_range(cls, value):
        left, right = (value, value) if isinstance(value, float) else value
        if left < 0 or right < 0 or left + right >= 1:
            raise ValueError("margins must be non-negative and leave part of the domain")
        return value


class OutputConfig(_Section):
    profile: str = DEFAULT_PROFILE_CSV
    compare: str = DEFAULT_COMPARE_CSV
    sweep: str = DEFAULT_SWEEP_CSV


class SweepConfig(_Section):
    k: List[float] = Field(default_factory=lambda: list(DEFAULT_SWEEP_K))
    m1_min: float = DEFAULT_SWEEP_RANGE[0]
    m1_max: float = DEFAULT_SWEEP_RANGE[1]
    m2_min: float = DEFAULT_SWEEP_RANGE[0]
    m2_max: float = DEFAULT_SWEEP_RANGE[1]
    n: int = Field(DEFAULT_SWEEP_N, ge=1)


class ExperimentConfig(_Section):
    base_curve: BaseCurveConfig
    v0: FunctionConfig = Field(default_factory=lambda: FunctionConfig(poly=[0.0]))
    w: FunctionConfig
    domain: DomainConfig
    d0: float = Field(1.0, gt=0.0)
    methods: List[EstimatorMethod] = Field(default_factory=lambda: [EstimatorMethod.ZEROTH])
    grid: GridConfig = Field(default_factory=GridConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
