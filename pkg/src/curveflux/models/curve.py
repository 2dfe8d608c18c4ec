"""
Plane curves identified with the complex plane
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from ..core.config import ARC_LENGTH_TOLERANCE, ZERO_CURVATURE
from ..core.errors import DomainError, SingularParametrizationError


@dataclass(frozen=True)
class FrenetFrame:
    """Unit tangent, unit normal (N = i*T) and signed curvature at a point"""
    T: complex
    N: complex
    k: float


class PlaneCurve(ABC):
    """Arc-length parametrized curve alpha: [u1, u2] -> C"""

    u1: float
    u2: float

    @property
    def length(self) -> float:
        return self.u2 - self.u1

    def check_domain(self, u):
        """Raise DomainError unless every u lies in [u1, u2]"""
        u = np.asarray(u, dtype=float)
        slack = 1e-12 * max(1.0, abs(self.length))
        if np.any(u < self.u1 - slack) or np.any(u > self.u2 + slack):
            raise DomainError(
                f"u outside curve domain [{self.u1!r}, {self.u2!r}]"
            )
        return u

    @abstractmethod
    def position(self, u):
        """alpha(u)"""

    @abstractmethod
    def velocity(self, u):
        """d alpha / du"""

    @abstractmethod
    def acceleration(self, u):
        """d^2 alpha / du^2"""

    def curvature(self, u):
        """Signed curvature Im(conj(a') a'') / |a'|^3"""
        d1 = self.velocity(u)
        d2 = self.acceleration(u)
        speed = np.abs(d1)
        return np.imag(np.conj(d1) * d2) / speed ** 3

    def curvature_derivative(self, u):
        """dk/du; zero for lines and circles"""
        return np.zeros_like(np.asarray(u, dtype=float))[()]


@dataclass(frozen=True)
class Line(PlaneCurve):
    """alpha(u) = origin + direction * u"""
    direction: complex = 1.0 + 0.0j
    origin: complex = 0.0j
    u1: float = 0.0
    u2: float = 1.0

    def __post_init__(self):
        if abs(abs(self.direction) - 1.0) > ARC_LENGTH_TOLERANCE:
            raise SingularParametrizationError(
                f"line direction {self.direction!r} is not a unit complex number"
            )

    def position(self, u):
        u = self.check_domain(u)
        return (self.origin + self.direction * u)[()]

    def velocity(self, u):
        u = self.check_domain(u)
        return np.full(u.shape, complex(self.direction))[()]

    def acceleration(self, u):
        u = self.check_domain(u)
        return np.zeros(u.shape, dtype=complex)[()]

    def curvature(self, u):
        u = self.check_domain(u)
        return np.zeros(u.shape)[()]


@dataclass(frozen=True)
class Circle(PlaneCurve):
    """alpha(u) = f - i exp(i(k u + phase)) / k, the circle of curvature k about f"""
    k: float = 1.0
    focal: complex = 0.0j
    phase: float = 0.0
    u1: float = 0.0
    u2: float = 1.0

    def __post_init__(self):
        if self.k == 0:
            raise SingularParametrizationError("circle curvature must be non-zero")

    def _rotor(self, u):
        u = self.check_domain(u)
        return np.exp(1j * (self.k * u + self.phase))

    def position(self, u):
        return (self.focal - 1j * self._rotor(u) / self.k)[()]

    def velocity(self, u):
        return self._rotor(u)[()]

    def acceleration(self, u):
        return (1j * self.k * self._rotor(u))[()]

    def curvature(self, u):
        u = self.check_domain(u)
        return np.full(u.shape, float(self.k))[()]


@dataclass(frozen=True)
class SampledArc(PlaneCurve):
    """
    Curve known at uniformly spaced arc-length nodes.

    Nodal derivatives use second-order centred differences (one-sided at the
    ends); values between nodes are interpolated linearly.
    """
    points: np.ndarray = field(repr=False, default_factory=lambda: np.zeros(0, complex))
    u1: float = 0.0
    spacing: float = 1.0
    _d1: np.ndarray = field(init=False, repr=False, compare=False)
    _d2: np.ndarray = field(init=False, repr=False, compare=False)
    _k: np.ndarray = field(init=False, repr=False, compare=False)
    _dk: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=complex)
        if pts.size < 3 or self.spacing <= 0:
            raise SingularParametrizationError("sampled arc needs >= 3 nodes and positive spacing")
        d1 = np.gradient(pts, self.spacing, edge_order=2)
        d2 = np.gradient(d1, self.spacing, edge_order=2)
        speed = np.abs(d1)
        if np.any(speed == 0):
            raise SingularParametrizationError("sampled arc has vanishing speed")
        k = np.imag(np.conj(d1) * d2) / speed ** 3
        k[np.abs(k) < ZERO_CURVATURE] = 0.0
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_d1", d1)
        object.__setattr__(self, "_d2", d2)
        object.__setattr__(self, "_k", k)
        object.__setattr__(self, "_dk", np.gradient(k, self.spacing, edge_order=2))

    @property
    def u2(self) -> float:
        return self.u1 + self.spacing * (self.points.size - 1)

    @property
    def nodes(self) -> np.ndarray:
        return self.u1 + self.spacing * np.arange(self.points.size)

    def _interp(self, u, values):
        u = self.check_domain(u)
        grid = self.nodes
        if np.iscomplexobj(values):
            out = np.interp(u, grid, values.real) + 1j * np.interp(u, grid, values.imag)
        else:
            out = np.interp(u, grid, values)
        return np.asarray(out)[()]

    def position(self, u):
        return self._interp(u, self.points)

    def velocity(self, u):
        return self._interp(u, self._d1)

    def acceleration(self, u):
        return self._interp(u, self._d2)

    def curvature(self, u):
        k = np.asarray(self._interp(u, self._k))
        return np.where(np.abs(k) < ZERO_CURVATURE, 0.0, k)[()]

    def curvature_derivative(self, u):
        return self._interp(u, self._dk)
