"""
Effective diffusion coefficient estimators.

The finite-rate estimators share the master formula D = D0 Im(D1) / Re(D2),
where for a harmonic potential P with zero flux across both walls
D1 = P(alpha2) - P(alpha1) and D2 = sigma d(rho / sigma)/du, rho being the
fiber integral of P weighted by the Jacobian. The base curve is replaced by
its circle of curvature at the evaluation point, for which rho has a closed
form whenever P is a sum of A log(z - c) terms.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly

from ..models.channel import ChannelSpec, WallData
from ..models.estimate import (
    DiffusionProfile,
    EstimateDiagnostics,
    EstimatorMethod,
    SweepRow,
)
from ..models.steiner import SteinerMode
from ..utils.parallel import ordered_map
from .channel import wall_circles, walls
from .config import (
    DEFAULT_N_PROFILE,
    DEFAULT_SWEEP_K,
    DEFAULT_SWEEP_N,
    DEFAULT_SWEEP_RANGE,
    LIMIT_STEP,
    PARALLEL_CONDITION,
    SERIES_THRESHOLD,
    VALIDITY_MARGIN,
    ZERO_CURVATURE,
)
from .errors import (
    CurveFluxError,
    DegeneratePairError,
    DomainError,
    EstimatorDegenerateError,
    FocalPointError,
    NoIntersectionError,
    PoleError,
)
from .steiner import build_map, eval_P, log_increment, map_terms

logger = logging.getLogger(__name__)

Term = Tuple[complex, complex]

# below this |x| the log moments switch to their power series
_MOMENT_SERIES = 0.05
_SERIES_TERMS = 26
# (1 + x) log(1 + x) - x = sum_{n>=2} (-1)^n x^n / (n (n - 1))
_F1_COEFS = np.array([0.0, 0.0] + [(-1) ** n / (n * (n - 1)) for n in range(2, _SERIES_TERMS)])
# int_0^x y log(1 + y) dy = sum_{m>=1} (-1)^(m+1) x^(m+2) / (m (m + 2))
_F2_COEFS = np.array([0.0, 0.0, 0.0] + [(-1) ** (m + 1) / (m * (m + 2)) for m in range(1, _SERIES_TERMS - 2)])


@dataclass(frozen=True)
class _Fiber:
    """Transversal fiber of the channel at u in base-curve coordinates"""
    u: float
    k: float
    N: complex
    s1: float
    s2: float
    ds1: float
    ds2: float
    walls: Optional[WallData] = None

    @property
    def e1(self) -> float:
        return 1.0 - self.s1 * self.k

    @property
    def e2(self) -> float:
        return 1.0 - self.s2 * self.k

    @property
    def alpha1(self) -> complex:
        return self.walls.alpha1

    @property
    def alpha2(self) -> complex:
        return self.walls.alpha2


def _fiber(spec: ChannelSpec, u: float) -> _Fiber:
    data = walls(spec, u)
    v0, half = float(spec.v0(u)), float(spec.w(u)) / 2
    dv0, dhalf = float(spec.v0.derivative(u)), float(spec.w.derivative(u)) / 2
    if half <= 0:
        raise DomainError("width must be positive").at(u)
    fiber = _Fiber(
        u=float(u), k=data.frame.k, N=data.frame.N,
        s1=v0 - half, s2=v0 + half, ds1=dv0 - dhalf, ds2=dv0 + dhalf, walls=data,
    )
    if min(fiber.e1, fiber.e2) < VALIDITY_MARGIN:
        raise FocalPointError("channel contains a focal point of the base curve", u=float(u))
    return fiber


def _log_moments(x: complex) -> Tuple[complex, complex]:
    """int_0^x log(1 + y) dy and int_0^x y log(1 + y) dy"""
    if abs(x) < _MOMENT_SERIES:
        return complex(npoly.polyval(x, _F1_COEFS)), complex(npoly.polyval(x, _F2_COEFS))
    log1 = np.log(1 + x)
    first = (1 + x) * log1 - x
    second = (x * x - 1) * log1 / 2 - x * x / 4 + x / 2
    return complex(first), complex(second)


def rho_hat(k: float, N: complex, alpha1: complex, alpha2: complex, e1: float,
            terms: Iterable[Term]) -> complex:
    """
    int P_hat (1 - s k) ds over the fiber, P_hat = P - P(alpha1), for
    P = sum A log(z - c) and a base curve of constant curvature k.
    """
    delta = alpha2 - alpha1
    slope = k / N
    moment = 0j
    for amplitude, centre in terms:
        a = alpha1 - centre
        if a == 0:
            raise PoleError("wall point coincides with a pole of the potential")
        first, second = _log_moments(delta / a)
        moment += amplitude * (e1 * a * first - slope * a * a * second)
    return moment / N


def master_terms(k: float, N: complex, alpha1: complex, alpha2: complex,
                 s1: float, s2: float, ds1: float, ds2: float,
                 terms: Sequence[Term]) -> Tuple[complex, complex, complex]:
    """(D1, D2, rho_hat) for a potential given as log terms"""
    e1, e2 = 1.0 - s1 * k, 1.0 - s2 * k
    rho = rho_hat(k, N, alpha1, alpha2, e1, terms)
    D1 = log_increment(terms, alpha1, alpha2)
    drho = D1 * e2 * ds2 - 1j * D1 * e2 * e2 - 2j * k * rho
    sig = (s2 - s1) * (1.0 - k * (s1 + s2) / 2)
    dsig = e2 * ds2 - e1 * ds1
    D2 = drho - rho * dsig / sig
    return D1, D2, rho


def _finish(fiber: _Fiber, d0: float, D1: complex, D2: complex) -> float:
    if D2.real == 0:
        raise EstimatorDegenerateError("Re(D2) vanishes").at(fiber.u)
    return d0 * D1.imag / D2.real


def d_zeroth(spec: ChannelSpec, u: float) -> float:
    """D0 log(e1 / e2) / (k w (1 - k v0)), the infinite transversal rate limit"""
    fiber = _fiber(spec, u)
    a = 1.0 - fiber.k * float(spec.v0(u))
    x = fiber.k * (fiber.s2 - fiber.s1) / (2 * a)
    if abs(x) < SERIES_THRESHOLD:
        ratio = 1 + x * x / 3 + x ** 4 / 5
    else:
        ratio = math.atanh(x) / x
    return spec.d0 * ratio / (a * a)


def _intersection(fiber: _Fiber) -> complex:
    data = fiber.walls
    d1, d2 = data.dalpha1, data.dalpha2
    matrix = np.array([[d1.real, -d2.real], [d1.imag, -d2.imag]])
    delta = data.alpha2 - data.alpha1
    cond = np.linalg.cond(matrix)
    if not np.isfinite(cond) or cond > PARALLEL_CONDITION:
        raise NoIntersectionError("wall tangents are parallel on a curved base").at(fiber.u)
    t, _ = np.linalg.solve(matrix, [delta.real, delta.imag])
    return data.alpha1 + t * d1


def _published_linear(fiber: _Fiber, p: complex) -> Optional[complex]:
    data, k, N = fiber.walls, fiber.k, fiber.N
    a0, a1, a2 = data.alpha0, data.alpha1, data.alpha2
    f = complex(data.alpha0 - (fiber.s1 + fiber.s2) / 2 * N) + N / k
    if a0 == f:
        return None
    common = 2 * N * N * (a0 - f)
    R = k * (a0 - f - (f - p)) * ((a1 - f) * data.dalpha1 - (a2 - f) * data.dalpha2) / common
    Q1 = k * (f - p - (a1 - f)) * (a2 - f) * (a1 - p) * data.dalpha2 / (common * (a2 - a1))
    Q2 = k * (f - p - (a2 - f)) * (a1 - f) * (a2 - p) * data.dalpha1 / (common * (a2 - a1))
    return complex(R + (Q2 - Q1) * np.log((a2 - p) / (a1 - p)))


def _published_concentric(fiber: _Fiber, g: complex) -> Optional[complex]:
    data, k, N = fiber.walls, fiber.k, fiber.N
    a0, a1, a2 = data.alpha0, data.alpha1, data.alpha2
    f = complex(data.alpha0 - (fiber.s1 + fiber.s2) / 2 * N) + N / k
    if a0 == f:
        return None
    common = 2 * N * N * (a0 - f)
    Q = 1j * k * ((a1 + g - 2 * f) * (a1 - g) * (a2 - f) * data.dalpha2
                  - (a2 + g - 2 * f) * (a2 - g) * (a1 - f) * data.dalpha1) / (common * (a2 - a1))
    R = 1j * k * (a0 + g - 2 * f) * ((a2 - f) * data.dalpha2 - (a1 - f) * data.dalpha1) / common
    return complex(Q * np.log((a2 - g) / (a1 - g)) - R)


def d_linear(spec: ChannelSpec, u: float) -> Tuple[float, EstimateDiagnostics]:
    """Walls replaced by their tangent lines, P = log(z - p) about their intersection"""
    fiber = _fiber(spec, u)
    diag = EstimateDiagnostics()
    data = fiber.walls

    if abs(fiber.k) < ZERO_CURVATURE:
        y0p = (fiber.ds1 + fiber.ds2) / 2
        wp = fiber.ds2 - fiber.ds1
        diag.D1 = 1j * (math.atan(fiber.ds2) - math.atan(fiber.ds1))
        diag.D2 = complex(1j * (data.dalpha1 - data.dalpha2) / data.frame.T)
        diag.flag("straight_base")
        return d_classical(EstimatorMethod.DAGDUG_PINEDA, y0p, wp, spec.d0), diag

    p = _intersection(fiber)
    D1, D2, rho = master_terms(
        fiber.k, fiber.N, fiber.alpha1, fiber.alpha2,
        fiber.s1, fiber.s2, fiber.ds1, fiber.ds2, [(1.0, p)],
    )
    diag.D1, diag.D2, diag.rho, diag.p = D1, D2, rho, p
    diag.d2_published = _published_linear(fiber, p)
    return _finish(fiber, spec.d0, D1, D2), diag


def d_quadratic(spec: ChannelSpec, u: float) -> Tuple[float, EstimateDiagnostics]:
    """Walls replaced by their circles of curvature, P from the Steiner net"""
    fiber = _fiber(spec, u)
    diag = EstimateDiagnostics()
    pair, flags = wall_circles(spec, u)
    for name in flags:
        diag.flag(name)
    try:
        steiner = build_map(pair)
    except DegeneratePairError as exc:
        raise EstimatorDegenerateError(f"wall circles are degenerate: {exc}").at(fiber.u) from exc
    if steiner.j_flipped:
        diag.flag("j_flipped")
    terms = map_terms(steiner)

    D1, D2, rho = master_terms(
        fiber.k, fiber.N, fiber.alpha1, fiber.alpha2,
        fiber.s1, fiber.s2, fiber.ds1, fiber.ds2, terms,
    )
    principal = complex(eval_P(steiner, fiber.alpha2) - eval_P(steiner, fiber.alpha1))
    if abs(principal - D1) > 1e-9 * max(1.0, abs(D1)):
        diag.flag("fiber_unwrap")
        logger.debug("D1 unwrapped along the fiber at u=%r", u)

    diag.D1, diag.D2, diag.rho, diag.steiner = D1, D2, rho, steiner
    if steiner.mode is SteinerMode.CONCENTRIC and abs(fiber.k) >= ZERO_CURVATURE:
        diag.d2_published = _published_concentric(fiber, steiner.g)
    return _finish(fiber, spec.d0, D1, D2), diag


def d_classical(method: EstimatorMethod, y0p: float, wp: float, d0: float = 1.0) -> float:
    """Straight-line baselines in terms of the centreline and width slopes"""
    method = EstimatorMethod(method)
    if method is EstimatorMethod.ZWANZIG:
        return d0 / (1 + wp * wp / 12)
    if method is EstimatorMethod.BRADLEY:
        return d0 / (1 + y0p * y0p + wp * wp / 12)
    if method is EstimatorMethod.REGUERA_RUBI:
        return d0 * (1 + wp * wp / 4) ** (-1.0 / 3.0)
    if method is EstimatorMethod.KALINAY_PERCUS:
        x = wp / 2
        if abs(x) < SERIES_THRESHOLD:
            return d0 * (1 - x * x / 3 + x ** 4 / 5)
        return d0 * math.atan(x) / x
    if method is EstimatorMethod.DAGDUG_PINEDA:
        a, h = y0p, wp / 2
        if abs(wp) < SERIES_THRESHOLD:
            b = 1 + a * a
            return d0 * (1 / b + (3 * a * a - 1) * h * h / (3 * b ** 3))
        return d0 * math.atan2(wp, 1 + a * a - h * h) / wp
    raise ValueError(f"{method.value} is not a straight-line baseline")


def estimate(spec: ChannelSpec, method: EstimatorMethod, u: float) -> Tuple[float, Optional[EstimateDiagnostics]]:
    """Evaluate one estimator at one u"""
    method = EstimatorMethod(method)
    if method is EstimatorMethod.ZEROTH:
        return d_zeroth(spec, u), None
    if method is EstimatorMethod.LINEAR:
        return d_linear(spec, u)
    if method is EstimatorMethod.QUADRATIC:
        return d_quadratic(spec, u)
    if method.is_baseline:
        if abs(float(spec.base.curvature(u))) >= ZERO_CURVATURE:
            raise EstimatorDegenerateError(f"{method.value} needs a straight base curve").at(u)
        return d_classical(method, float(spec.v0.derivative(u)), float(spec.w.derivative(u)), spec.d0), None
    raise ValueError(f"no estimator for {method!r}")


def profile(
    spec: ChannelSpec,
    method: EstimatorMethod,
    n: int = DEFAULT_N_PROFILE,
    on_error: str = "raise",
    workers: Optional[int] = None,
) -> DiffusionProfile:
    """
    Sample an estimator on n uniform points of the channel domain.

    With on_error="nan" failing points become NaN and are logged instead of
    raising.
    """
    if n < 2:
        raise ValueError(f"profile needs n >= 2, got {n}")
    if on_error not in ("raise", "nan"):
        raise ValueError(f"on_error must be 'raise' or 'nan', got {on_error!r}")
    method = EstimatorMethod(method)
    grid = np.linspace(spec.u1, spec.u2, n)

    def evaluate(u: float):
        try:
            return estimate(spec, method, float(u))
        except CurveFluxError as exc:
            exc.at(float(u))
            if on_error == "raise":
                raise
            logger.warning("%s failed: %s", method.value, exc)
            return math.nan, None

    results = ordered_map(evaluate, grid, workers)
    D = np.array([value for value, _ in results], dtype=float)
    diagnostics = [diag for _, diag in results]
    _unwrap_along_grid(D, diagnostics, method)
    return DiffusionProfile(u=grid, D=D, method=method, diagnostics=diagnostics)


def _unwrap_along_grid(D: np.ndarray, diagnostics: List[Optional[EstimateDiagnostics]],
                       method: EstimatorMethod) -> None:
    """
    Make angle-valued Im(D1) continuous in u, rescaling D where a 2 pi jump
    was removed
    """
    index = [
        i for i, diag in enumerate(diagnostics)
        if diag is not None and np.isfinite(diag.D1.imag)
        and (diag.steiner is None or diag.steiner.intersecting)
    ]
    if len(index) < 2:
        return
    angles = np.array([diagnostics[i].D1.imag for i in index])
    unwrapped = np.unwrap(angles)
    for i, before, after in zip(index, angles, unwrapped):
        if after != before and before != 0:
            diag = diagnostics[i]
            diag.flag("grid_unwrap")
            D[i] *= after / before
            diag.D1 = complex(diag.D1.real, after)
            logger.debug("%s: D1 unwrapped along u at index %d", method.value, i)


def _sweep_parts(k: float, m1: float, m2: float) -> Optional[Tuple[float, float]]:
    """
    (Im D1, Re D2) for the tangent-line example geometry, None once a wall
    reaches the focal point.

    The wall through -1 with slope m meets the fiber of u at offset s(u) with
    s(0) = m and s'(0) = (1 - k m) m, so its velocity is (1 - k m)(1 + i m).
    """
    slopes = []
    for m in (m1, m2):
        if 1 - k * m <= VALIDITY_MARGIN:
            return None
        slopes.append((1 - k * m) * m)
    D1, D2, _ = master_terms(k, 1j, 1j * m1, 1j * m2, m1, m2, slopes[0], slopes[1], [(1.0, -1.0 + 0j)])
    return D1.imag, D2.real


def sweep_point(k: float, m1: float, m2: float, d0: float = 1.0) -> float:
    """
    D at u = 0 for a base circle of curvature k through 0 with f = i / k and
    walls on the lines through p = -1 of slopes m1, m2.
    """
    if abs(k) < ZERO_CURVATURE:
        return d_classical(EstimatorMethod.DAGDUG_PINEDA, (m1 + m2) / 2, m2 - m1, d0)
    if m1 == m2:
        upper = _sweep_parts(k, m1, m2 + LIMIT_STEP)
        lower = _sweep_parts(k, m1, m2 - LIMIT_STEP)
        if upper is None or lower is None or upper[1] == lower[1]:
            return math.inf
        return d0 * (upper[0] - lower[0]) / (upper[1] - lower[1])
    parts = _sweep_parts(k, m1, m2)
    if parts is None or abs(parts[1]) < 1e-12:
        return math.inf
    return d0 * parts[0] / parts[1]


def sweep_example(
    k_values: Sequence[float] = DEFAULT_SWEEP_K,
    m1_range: Tuple[float, float] = DEFAULT_SWEEP_RANGE,
    m2_range: Tuple[float, float] = DEFAULT_SWEEP_RANGE,
    n: int = DEFAULT_SWEEP_N,
    d0: float = 1.0,
    workers: Optional[int] = None,
) -> List[SweepRow]:
    """n x n slope grid per k, rows ordered by k, then m1, then m2"""
    if n < 1:
        raise ValueError(f"sweep needs n >= 1, got {n}")
    m1_values = np.linspace(m1_range[0], m1_range[1], n)
    m2_values = np.linspace(m2_range[0], m2_range[1], n)
    points = [(float(k), float(a), float(b)) for k in k_values for a in m1_values for b in m2_values]

    def evaluate(point):
        k, m1, m2 = point
        return SweepRow(k=k, m1=m1, m2=m2, D=sweep_point(k, m1, m2, d0))

    rows = ordered_map(evaluate, points, workers)
    singular = sum(1 for row in rows if math.isinf(row.D))
    logger.debug("sweep: %d samples, %d singular", len(rows), singular)
    return rows
