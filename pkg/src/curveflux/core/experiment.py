"""
Experiment config parsing and channel construction
"""
import logging
import re
import sys
from pathlib import Path
from typing import List, Union

import numpy as np
from pydantic import ValidationError

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..models.channel import ChannelSpec, PolynomialProfile, SampledProfile, ScalarProfile
from ..models.config import ExperimentConfig, FunctionConfig
from ..models.curve import Circle, Line, PlaneCurve
from .config import MIN_SAMPLES, SAMPLED_BASE_NODES
from .curve_geometry import reparametrize_arclength
from .errors import ConfigError, CurveFluxError

logger = logging.getLogger(__name__)

_LINE_PATTERN = re.compile(r"line (\d+)")
# points at which semantic checks sample the width function
_WIDTH_CHECK_POINTS = 257


def parse_config(text: str) -> ExperimentConfig:
    """Parse TOML text and validate it, collecting every violation"""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        match = _LINE_PATTERN.search(str(exc))
        raise ConfigError([f"syntax error: {exc}"], line=int(match.group(1)) if match else None) from exc

    try:
        config = ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        violations = [
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in exc.errors()
        ]
        raise ConfigError(violations) from exc

    violations = _semantic_violations(config)
    if violations:
        raise ConfigError(violations)
    logger.debug("parsed config: %s base, methods %s",
                 config.base_curve.type, [m.value for m in config.methods])
    return config


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise ConfigError([f"cannot read {path}: {exc}"]) from exc
    return parse_config(text)


def _semantic_violations(config: ExperimentConfig) -> List[str]:
    violations = []
    base = config.base_curve
    u1, u2 = config.domain.u1, config.domain.u2

    if not u2 > u1:
        violations.append("domain: u2 must be greater than u1")
    if base.type == "circle" and not base.k:
        violations.append("base_curve.k: circle curvature must be non-zero")
    if base.type == "samples" and (base.points is None or len(base.points) < MIN_SAMPLES):
        violations.append(f"base_curve.points: need at least {MIN_SAMPLES} points")
    if base.type != "samples" and base.points is not None:
        violations.append("base_curve.points: only allowed for type 'samples'")
    if base.type != "circle" and base.k is not None:
        violations.append("base_curve.k: only allowed for type 'circle'")
    if config.grid.nv % 2 == 0:
        violations.append("grid.nv: must be odd")
    for name, function in (("v0", config.v0), ("w", config.w)):
        if function.samples is not None and len(function.samples) < 3:
            violations.append(f"{name}.samples: need at least 3 samples")
    sweep = config.sweep
    if sweep.m1_min > sweep.m1_max or sweep.m2_min > sweep.m2_max:
        violations.append("sweep: slope ranges must satisfy min <= max")

    if u2 > u1 and not any(v.startswith("w.") for v in violations):
        u = np.linspace(u1, u2, _WIDTH_CHECK_POINTS)
        if np.any(_profile(config.w, u1, u2)(u) <= 0):
            violations.append("w: width must be positive")
    return violations


def _profile(function: FunctionConfig, u1: float, u2: float) -> ScalarProfile:
    if function.poly is not None:
        return PolynomialProfile(tuple(function.poly))
    return SampledProfile(samples=np.asarray(function.samples, dtype=float), u1=u1, u2=u2)


def _base_curve(config: ExperimentConfig) -> PlaneCurve:
    base = config.base_curve
    u1, u2 = config.domain.u1, config.domain.u2
    if base.type == "line":
        return Line(
            direction=complex(np.exp(1j * base.angle)),
            origin=complex(base.origin_re, base.origin_im),
            u1=u1, u2=u2,
        )
    if base.type == "circle":
        return Circle(
            k=base.k, focal=complex(base.center_re, base.center_im),
            phase=base.phase, u1=u1, u2=u2,
        )
    samples = [(float(i), complex(x, y)) for i, (x, y) in enumerate(base.points)]
    arc = reparametrize_arclength(samples, n=max(len(samples), SAMPLED_BASE_NODES))
    if u1 < arc.u1 or u2 > arc.u2:
        raise ConfigError([f"domain: [{u1!r}, {u2!r}] exceeds sampled curve length {arc.u2!r}"])
    return arc


def build_channel(config: ExperimentConfig) -> ChannelSpec:
    """ChannelSpec described by a validated config"""
    u1, u2 = config.domain.u1, config.domain.u2
    try:
        return ChannelSpec(
            base=_base_curve(config),
            v0=_profile(config.v0, u1, u2),
            w=_profile(config.w, u1, u2),
            d0=config.d0,
            u1=u1, u2=u2,
        )
    except ConfigError:
        raise
    except CurveFluxError as exc:
        raise ConfigError([str(exc)]) from exc
