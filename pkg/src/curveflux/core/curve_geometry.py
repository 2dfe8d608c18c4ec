"""
Frames, curvature, focal points and arc-length reparametrization of plane curves
"""
import logging
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.integrate import cumulative_trapezoid
from scipy.interpolate import CubicSpline

from ..models.curve import FrenetFrame, PlaneCurve, SampledArc
from .config import FOCAL_TOLERANCE, MIN_SAMPLES, ZERO_CURVATURE
from .errors import (
    DegenerateInputError,
    FocalPointError,
    NoFocalPointError,
    SingularParametrizationError,
)

logger = logging.getLogger(__name__)

Sample = Tuple[float, Union[complex, Sequence[float]]]

# sub-intervals per sample segment when measuring spline arc length
_ARC_SUBDIVISIONS = 32


def frenet(curve: PlaneCurve, u: float) -> FrenetFrame:
    """Unit tangent, normal N = iT and signed curvature at u"""
    d1 = complex(curve.velocity(u))
    speed = abs(d1)
    if speed == 0:
        raise SingularParametrizationError(f"vanishing speed at u={u!r}")
    T = d1 / speed
    return FrenetFrame(T=T, N=1j * T, k=float(curve.curvature(u)))


def curvature_from_derivatives(d1, d2):
    """k = Im(conj(a') a'') / |a'|^3 for complex first and second derivatives"""
    d1 = np.asarray(d1, dtype=complex)
    d2 = np.asarray(d2, dtype=complex)
    speed = np.abs(d1)
    if np.any(speed == 0):
        raise SingularParametrizationError("vanishing speed")
    return (np.imag(np.conj(d1) * d2) / speed ** 3)[()]


def curvature_general(
    x: Callable[[float], float],
    y: Callable[[float], float],
    t: float,
    h: float = 1e-4,
    derivatives: Optional[Tuple[Callable[[float], float], ...]] = None,
) -> float:
    """
    Curvature (x'y'' - y'x'') / (x'^2 + y'^2)^(3/2) of a curve with any regular
    parameter.

    derivatives, when given, is (x', y', x'', y'') and is used as is. Otherwise
    the derivatives come from central differences with a fixed step h.
    """
    if derivatives is not None:
        dx, dy, ddx, ddy = (float(f(t)) for f in derivatives)
    else:
        xm, x0, xp = x(t - h), x(t), x(t + h)
        ym, y0, yp = y(t - h), y(t), y(t + h)
        dx, dy = (xp - xm) / (2 * h), (yp - ym) / (2 * h)
        ddx, ddy = (xp - 2 * x0 + xm) / h ** 2, (yp - 2 * y0 + ym) / h ** 2
    speed = np.hypot(dx, dy)
    if speed < ZERO_CURVATURE:
        raise SingularParametrizationError(f"vanishing speed at t={t!r}")
    return float((dx * ddy - dy * ddx) / speed ** 3)


def offset_curvature(k, v):
    """Curvature k / (1 - k v) of the offset curve alpha + v N"""
    k = np.asarray(k, dtype=float)
    e = 1.0 - k * np.asarray(v, dtype=float)
    if np.any(np.abs(e) < FOCAL_TOLERANCE):
        raise FocalPointError("offset curve passes through a focal point")
    return (k / e)[()]


def focal_point(curve: PlaneCurve, u: float) -> complex:
    """Centre alpha + N / k of the circle of curvature at u"""
    frame = frenet(curve, u)
    if abs(frame.k) < ZERO_CURVATURE:
        raise NoFocalPointError(f"zero curvature at u={u!r}, no focal point")
    return complex(curve.position(u)) + frame.N / frame.k


def _as_complex(position) -> complex:
    if isinstance(position, (complex, float, int, np.number)):
        return complex(position)
    x, y = position
    return complex(float(x), float(y))


def reparametrize_arclength(samples: Sequence[Sample], n: Optional[int] = None) -> SampledArc:
    """
    Resample an ordered polyline into a SampledArc with uniform arc-length spacing.

    A cubic spline through the samples (parametrized by chord length) is
    measured for arc length and evaluated at n equally spaced lengths.
    """
    if len(samples) < MIN_SAMPLES:
        raise DegenerateInputError(
            f"need at least {MIN_SAMPLES} samples, got {len(samples)}"
        )
    ordered = sorted(samples, key=lambda item: item[0])
    pts = np.array([_as_complex(p) for _, p in ordered])
    chords = np.abs(np.diff(pts))
    scale = max(float(np.max(np.abs(pts))), 1.0)
    if np.any(chords <= 1e-14 * scale):
        raise DegenerateInputError("duplicate consecutive sample points")

    chord_param = np.concatenate(([0.0], np.cumsum(chords)))
    spline = CubicSpline(chord_param, pts)
    speed_fn = spline.derivative()

    fine = np.linspace(0.0, chord_param[-1], _ARC_SUBDIVISIONS * (pts.size - 1) + 1)
    arc = cumulative_trapezoid(np.abs(speed_fn(fine)), fine, initial=0.0)
    length = float(arc[-1])

    count = pts.size if n is None else int(n)
    if count < 3:
        raise DegenerateInputError("need at least 3 output nodes")
    targets = np.linspace(0.0, length, count)
    resampled = spline(np.interp(targets, arc, fine))
    logger.debug("reparametrized %d samples to %d nodes, length %.12g", pts.size, count, length)
    return SampledArc(points=resampled, u1=0.0, spacing=length / (count - 1))
