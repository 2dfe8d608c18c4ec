"""
Reference solutions: steady 2-D diffusion in channel coordinates and the
steady 1-D generalized Fick-Jacobs equation
"""
import logging
import math
from typing import Iterable, Optional, Tuple, Union

import numpy as np
from scipy import sparse
from scipy.integrate import cumulative_trapezoid
from scipy.sparse.linalg import cg, spsolve

from ..models.channel import ChannelSpec
from ..models.estimate import DiffusionProfile, EstimatorMethod
from ..models.field import ComparisonReport, Grid2D, MeasuredProfile, MethodComparison, SteadyField
from .channel import check_validity, effective_density, effective_flux, sigma
from .config import (
    DEFAULT_NU,
    DEFAULT_NV,
    FLAT_GRADIENT,
    ITERATION_FACTOR,
    MAX_PRINCIPLE_SLACK,
    MEASURE_MARGIN,
    RESIDUAL_TOLERANCE,
    SOLVER_RTOL,
)
from .errors import CurveFluxError, DomainError, FlatFieldError, ShapeError, SolverError
from .estimators import profile

logger = logging.getLogger(__name__)

Margin = Union[float, Tuple[float, float]]

# Bilinear element matrices on a rectangle, nodes (i,j) (i+1,j) (i+1,j+1) (i,j+1)
_K_UU = np.array([[2, -2, -1, 1], [-2, 2, 1, -1], [-1, 1, 2, -2], [1, -1, -2, 2]]) / 6.0
_K_VV = np.array([[2, 1, -1, -2], [1, 2, -2, -1], [-1, -2, 2, 1], [-2, -1, 1, 2]]) / 6.0
_K_UV = np.array([[1, 0, -1, 0], [0, -1, 0, 1], [-1, 0, 1, 0], [0, 1, 0, -1]]) / 2.0


def _metric_parts(spec: ChannelSpec, u: np.ndarray, v: np.ndarray):
    """(w/2, s_u, 1 - s k) broadcast over u[:, None] and v[None, :]"""
    u = u[:, None]
    v = v[None, :]
    half = spec.w(u) / 2
    s = spec.v0(u) + v * half
    s_u = spec.v0.derivative(u) + v * spec.w.derivative(u) / 2
    e = 1.0 - s * spec.base.curvature(u)
    return np.broadcast_arrays(half, s_u, e)


def make_grid(spec: ChannelSpec, nu: int = DEFAULT_NU, nv: int = DEFAULT_NV) -> Grid2D:
    """Uniform grid over [u1, u2] x [-1, 1] with the metric of phi at the nodes"""
    if nu < 16 or nv < 8:
        raise ShapeError(f"grid needs nu >= 16 and nv >= 8, got {nu}x{nv}")
    if nv % 2 == 0:
        raise ShapeError(f"nv must be odd for Simpson quadrature, got {nv}")
    check_validity(spec)
    u = np.linspace(spec.u1, spec.u2, nu)
    v = np.linspace(-1.0, 1.0, nv)
    half, s_u, e = _metric_parts(spec, u, v)
    return Grid2D(
        u=u, v=v,
        g_uu=e * e + s_u * s_u,
        g_uv=s_u * half,
        g_vv=half * half,
    )


def _assemble(spec: ChannelSpec, grid: Grid2D) -> sparse.csr_matrix:
    nu, nv = grid.shape
    hu, hv = grid.hu, grid.hv
    uc = (grid.u[:-1] + grid.u[1:]) / 2
    vc = (grid.v[:-1] + grid.v[1:]) / 2
    half, s_u, e = _metric_parts(spec, uc, vc)
    # sqrt(g) g^{ij} at element centres
    a = (half / e).ravel()
    b = (-s_u / e).ravel()
    c = ((e * e + s_u * s_u) / (e * half)).ravel()

    i, j = np.meshgrid(np.arange(nu - 1), np.arange(nv - 1), indexing="ij")
    i, j = i.ravel(), j.ravel()
    nodes = np.stack([i * nv + j, (i + 1) * nv + j, (i + 1) * nv + j + 1, i * nv + j + 1], axis=1)

    local = (
        a[:, None, None] * (hv / hu) * _K_UU
        + c[:, None, None] * (hu / hv) * _K_VV
        + b[:, None, None] * _K_UV
    )
    rows = np.repeat(nodes, 4, axis=1).ravel()
    cols = np.tile(nodes, (1, 4)).ravel()
    size = nu * nv
    return sparse.coo_matrix((local.ravel(), (rows, cols)), shape=(size, size)).tocsr()


def solve_steady(
    spec: ChannelSpec,
    grid: Grid2D,
    p_left: float = 0.0,
    p_right: float = 1.0,
    method: str = "lu",
) -> SteadyField:
    """
    Laplace-Beltrami equation in (u, v) with P fixed on the end fibers and
    zero conormal flux through the walls.
    """
    if method not in ("lu", "cg"):
        raise ValueError(f"method must be 'lu' or 'cg', got {method!r}")
    nu, nv = grid.shape
    stiffness = _assemble(spec, grid)

    values = np.zeros(nu * nv)
    values[:nv] = p_left
    values[-nv:] = p_right
    fixed = np.zeros(nu * nv, dtype=bool)
    fixed[:nv] = True
    fixed[-nv:] = True
    free = ~fixed

    system = stiffness[free][:, free].tocsr()
    rhs = -stiffness[free][:, fixed] @ values[fixed]

    if method == "lu":
        solution = spsolve(system.tocsc(), rhs)
    else:
        maxiter = ITERATION_FACTOR * nu * nv
        solution, info = cg(system, rhs, rtol=SOLVER_RTOL, maxiter=maxiter)
        if info != 0:
            residual = _relative_residual(system, solution, rhs)
            raise SolverError(f"conjugate gradients stopped after {maxiter} iterations", residual)

    residual = _relative_residual(system, solution, rhs)
    if residual > RESIDUAL_TOLERANCE:
        raise SolverError("linear solve missed the residual tolerance", residual)
    values[free] = solution
    P = values.reshape(nu, nv)

    lo, hi = min(p_left, p_right), max(p_left, p_right)
    excess = float(max(0.0, P.max() - hi, lo - P.min()))
    if excess > MAX_PRINCIPLE_SLACK:
        logger.warning("discrete maximum principle exceeded by %.3e", excess)
    logger.debug("steady solve %dx%d (%s): residual %.3e", nu, nv, method, residual)

    field = SteadyField(
        grid=grid, P=P, p_left=p_left, p_right=p_right,
        residual=residual, max_principle_excess=excess, solver=method,
    )
    field.p = effective_density(field, spec)
    field.j = effective_flux(field, spec)
    return field


def _relative_residual(system, solution, rhs) -> float:
    scale = max(float(np.linalg.norm(rhs)), 1e-300)
    return float(np.linalg.norm(system @ solution - rhs)) / scale


def _interior(u: np.ndarray, margin: Margin) -> np.ndarray:
    left, right = (margin, margin) if np.isscalar(margin) else margin
    length = u[-1] - u[0]
    tol = 1e-12 * length
    return (u >= u[0] + left * length - tol) & (u <= u[-1] - right * length + tol)


def measure_D(field: SteadyField, spec: ChannelSpec, margin: Margin = MEASURE_MARGIN) -> MeasuredProfile:
    """
    D = -j / (sigma d(p / sigma)/du) on the interior of the grid.

    margin is the excluded fraction of the domain at each end, or a
    (left, right) pair. Samples with a flat density ratio are NaN.
    """
    u = field.grid.u
    p = effective_density(field, spec) if field.p is None else field.p
    j = effective_flux(field, spec) if field.j is None else field.j
    sig = sigma(spec, u)
    slope = np.gradient(p / sig, u, edge_order=2)

    keep = _interior(u, margin)
    flat = np.abs(slope[keep]) < FLAT_GRADIENT
    with np.errstate(divide="ignore", invalid="ignore"):
        D = np.where(flat, np.nan, -j[keep] / (sig[keep] * slope[keep]))
    if D.size == 0 or np.all(flat):
        raise FlatFieldError("density ratio is flat at every interior sample")
    return MeasuredProfile(u=u[keep], D=D)


def fj_solve_steady(
    spec: ChannelSpec,
    D: Union[DiffusionProfile, np.ndarray],
    p_left: float,
    p_right: float,
    u: Optional[np.ndarray] = None,
) -> Tuple[np.ndarray, float]:
    """
    Steady d/du(D sigma d(p/sigma)/du) = 0 with p/sigma given at both ends.

    Returns p on the grid and the constant flux (p_left - p_right) / R where
    R = int du / (D sigma).
    """
    if isinstance(D, DiffusionProfile):
        u, values = D.u, D.D
    else:
        values = np.asarray(D, dtype=float)
        if u is None:
            u = np.linspace(spec.u1, spec.u2, values.size)
    u = np.asarray(u, dtype=float)
    if values.shape != u.shape:
        raise ShapeError("D samples and u-grid differ in shape")
    if not np.all(np.isfinite(values)) or np.any(values <= 0):
        raise DomainError("effective diffusion coefficient must be positive and finite")
    sig = sigma(spec, u)
    resistance = cumulative_trapezoid(1.0 / (values * sig), u, initial=0.0)
    flux = (p_left - p_right) / resistance[-1]
    return sig * (p_left - flux * resistance), float(flux)


def compare(
    spec: ChannelSpec,
    methods: Iterable[EstimatorMethod],
    nu: int = DEFAULT_NU,
    nv: int = DEFAULT_NV,
    margin: Margin = MEASURE_MARGIN,
    workers: Optional[int] = None,
) -> ComparisonReport:
    """Relative errors of each estimator against the 2-D steady solution"""
    methods = [EstimatorMethod(m) for m in methods]
    if not methods:
        raise ValueError("compare needs at least one method")
    field = solve_steady(spec, make_grid(spec, nu, nv), 0.0, 1.0)
    measured = measure_D(field, spec, margin)
    keep = _interior(field.grid.u, margin)
    j_oracle = float(np.mean(field.j[keep]))
    valid = ~measured.indeterminate

    report = ComparisonReport(nu=nu, nv=nv, j_oracle=j_oracle)
    for method in methods:
        try:
            estimated = profile(spec, method, n=nu, workers=workers)
            _, flux = fj_solve_steady(spec, estimated, 0.0, 1.0)
        except CurveFluxError as exc:
            logger.warning("%s skipped: %s", method.value, exc)
            report.rows.append(MethodComparison(method, math.nan, math.nan, math.nan))
            continue
        rel = np.abs(estimated.D[keep][valid] - measured.D[valid]) / np.abs(measured.D[valid])
        flux_err = abs(flux - j_oracle) / abs(j_oracle) if j_oracle else math.nan
        report.rows.append(MethodComparison(
            method=method,
            max_rel_err=float(np.max(rel)),
            mean_rel_err=float(np.mean(rel)),
            flux_rel_err=float(flux_err),
        ))
        logger.debug("%s: max %.3e mean %.3e flux %.3e", method.value,
                     report.rows[-1].max_rel_err, report.rows[-1].mean_rel_err, flux_err)
    return report
