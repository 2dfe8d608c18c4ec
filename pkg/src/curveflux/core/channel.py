"""
Channel geometry over the normal bundle and the cross-sectional functionals
of a 2-D field (effective density and effective flux)
"""
import logging
from typing import List, Tuple

import numpy as np
from scipy.integrate import quad, simpson

from ..models.channel import ChannelSpec, WallData
from ..models.field import SteadyField
from ..models.steiner import CirclePair
from .config import STRAIGHT_WALL_RADIUS, VALIDITY_GRID, VALIDITY_MARGIN, ZERO_CURVATURE
from .curve_geometry import curvature_from_derivatives, frenet
from .errors import DomainError, FocalPointError, ShapeError

logger = logging.getLogger(__name__)


def walls(spec: ChannelSpec, u: float) -> WallData:
    """Middle curve, both walls and their first (walls also second) u-derivatives"""
    spec.check_domain(u)
    u = float(u)
    frame = frenet(spec.base, u)
    T, N, k = frame.T, frame.N, frame.k
    dk = float(spec.base.curvature_derivative(u))
    alpha = complex(spec.base.position(u))

    v0, dv0, ddv0 = spec.v0.value(u), spec.v0.derivative(u), spec.v0.second_derivative(u)
    half, dhalf, ddhalf = spec.w.value(u) / 2, spec.w.derivative(u) / 2, spec.w.second_derivative(u) / 2

    def offset(s, ds, dds):
        e = 1.0 - s * k
        position = alpha + s * N
        velocity = e * T + ds * N
        acceleration = (-2 * ds * k - s * dk) * T + (e * k + dds) * N
        return position, velocity, acceleration

    a0, da0, _ = offset(v0, dv0, ddv0)
    a1, da1, dda1 = offset(v0 - half, dv0 - dhalf, ddv0 - ddhalf)
    a2, da2, dda2 = offset(v0 + half, dv0 + dhalf, ddv0 + ddhalf)
    return WallData(
        u=u, alpha0=a0, alpha1=a1, alpha2=a2,
        dalpha0=da0, dalpha1=da1, dalpha2=da2,
        frame=frame, ddalpha1=dda1, ddalpha2=dda2,
    )


def sigma(spec: ChannelSpec, u):
    """Area density w (1 - k v0)"""
    u = spec.check_domain(u)
    return (spec.w(u) * (1.0 - spec.base.curvature(u) * spec.v0(u)))[()]


def area(spec: ChannelSpec, u):
    """Channel area between u1 and u"""
    u = spec.check_domain(u)

    def integrand(a):
        return float(sigma(spec, a))

    values = [quad(integrand, spec.u1, float(b), limit=200)[0] for b in np.ravel(u)]
    return np.reshape(values, u.shape)[()]


def jacobian(spec: ChannelSpec, u, v):
    """det(phi') = (1 - s k)(w / 2); raises when a focal point is reached"""
    u = spec.check_domain(u)
    v = np.asarray(v, dtype=float)
    det = (1.0 - spec.s(u, v) * spec.base.curvature(u)) * spec.w(u) / 2
    bad = np.asarray(det <= 0)
    if np.any(bad):
        where = float(np.broadcast_to(u, bad.shape)[bad].flat[0])
        raise FocalPointError("non-positive Jacobian, focal point inside channel", u=where)
    return det[()]


def gamma(spec: ChannelSpec, u):
    """
    Transversal conductance (1/2) int w / (1 - s k) dv = log(e1 / e2) / k.

    D0 gamma / sigma is the zeroth-order effective diffusion coefficient.
    """
    u = spec.check_domain(u)
    k = spec.base.curvature(u)
    w = spec.w(u)
    a = 1.0 - k * spec.v0(u)
    x = k * w / (2 * a)
    small = np.abs(x) < 1e-6
    safe = np.where(small, 0.5, x)
    ratio = np.where(small, 1 + x ** 2 / 3 + x ** 4 / 5, np.arctanh(safe) / safe)
    return (w * ratio / a)[()]


def check_validity(spec: ChannelSpec, grid: Tuple[int, int] = VALIDITY_GRID) -> None:
    """Positive width and 1 - s k >= margin on a sample grid of the channel"""
    nu, nv = grid
    u = np.linspace(spec.u1, spec.u2, nu)
    w = spec.w(u)
    if np.any(w <= 0):
        bad = float(u[np.argmax(w <= 0)])
        raise DomainError(f"width must be positive (u={bad!r})")
    v = np.linspace(-1.0, 1.0, nv)
    e = 1.0 - spec.s(u[:, None], v[None, :]) * spec.base.curvature(u)[:, None]
    if np.min(e) < VALIDITY_MARGIN:
        i = np.unravel_index(np.argmin(e), e.shape)[0]
        raise FocalPointError("channel contains a focal point of the base curve", u=float(u[i]))


def wall_circles(spec: ChannelSpec, u: float) -> Tuple[CirclePair, List[str]]:
    """
    Circles of curvature of both walls at u.

    A wall with |k| below the zero-curvature threshold is replaced by a circle
    of radius STRAIGHT_WALL_RADIUS * w tangent to it on its normal side.
    """
    data = walls(spec, u)
    width = float(spec.w(u))
    flags: List[str] = []
    circles = []
    for index, (pos, d1, d2) in enumerate(
        ((data.alpha1, data.dalpha1, data.ddalpha1), (data.alpha2, data.dalpha2, data.ddalpha2)),
        start=1,
    ):
        k = float(curvature_from_derivatives(d1, d2))
        normal = 1j * d1 / abs(d1)
        if abs(k) < ZERO_CURVATURE:
            radius = STRAIGHT_WALL_RADIUS * width
            flags.append(f"straight_wall_{index}")
            logger.debug("wall %d straight at u=%r, using radius %.3g", index, u, radius)
            circles.append((pos + normal * radius, radius))
        else:
            circles.append((pos + normal / k, 1.0 / abs(k)))
    (f1, r1), (f2, r2) = circles
    return CirclePair(f1=f1, r1=r1, f2=f2, r2=r2), flags


def _check_field(field: SteadyField, spec: ChannelSpec):
    grid = field.grid
    if np.shape(field.P) != grid.shape:
        raise ShapeError(f"field shape {np.shape(field.P)} does not match grid {grid.shape}")
    tol = 1e-9 * max(1.0, abs(spec.length))
    if abs(grid.u[0] - spec.u1) > tol or abs(grid.u[-1] - spec.u2) > tol:
        raise ShapeError("grid u-range does not match the channel domain")
    return grid


def effective_density(field: SteadyField, spec: ChannelSpec) -> np.ndarray:
    """p(u) = int P det(phi') dv by composite Simpson over v"""
    grid = _check_field(field, spec)
    return simpson(field.P * grid.sqrt_det, x=grid.v, axis=1)


def effective_flux(field: SteadyField, spec: ChannelSpec) -> np.ndarray:
    """j(u) = -D0 int (g_vv P_u - g_uv P_v) / sqrt(g) dv, the flux through each fiber"""
    grid = _check_field(field, spec)
    P_u, P_v = np.gradient(field.P, grid.u, grid.v, edge_order=2)
    density = (grid.g_vv * P_u - grid.g_uv * P_v) / grid.sqrt_det
    return -spec.d0 * simpson(density, x=grid.v, axis=1)
