"""
Channel description over the normal bundle of a base curve
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from numpy.polynomial import Polynomial

from ..core.errors import DegenerateInputError, DomainError
from .curve import FrenetFrame, PlaneCurve


class ScalarProfile(ABC):
    """A real function of u with its first two derivatives"""

    @abstractmethod
    def value(self, u):
        pass

    @abstractmethod
    def derivative(self, u):
        pass

    @abstractmethod
    def second_derivative(self, u):
        pass

    def __call__(self, u):
        return self.value(u)


@dataclass(frozen=True)
class PolynomialProfile(ScalarProfile):
    """Polynomial in u, coefficients in ascending order"""
    coefficients: Sequence[float] = (0.0,)
    _poly: Polynomial = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        coefs = tuple(float(c) for c in self.coefficients) or (0.0,)
        object.__setattr__(self, "coefficients", coefs)
        object.__setattr__(self, "_poly", Polynomial(coefs))

    def value(self, u):
        return self._poly(u)

    def derivative(self, u):
        return self._poly.deriv(1)(u)

    def second_derivative(self, u):
        return self._poly.deriv(2)(u)


@dataclass(frozen=True)
class SampledProfile(ScalarProfile):
    """Uniform samples on [u1, u2]; derivatives by second-order differences"""
    samples: np.ndarray = field(repr=False, default_factory=lambda: np.zeros(0))
    u1: float = 0.0
    u2: float = 1.0
    _d1: np.ndarray = field(init=False, repr=False, compare=False)
    _d2: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        values = np.asarray(self.samples, dtype=float)
        if values.size < 3:
            raise DegenerateInputError("sampled profile needs at least 3 samples")
        if not self.u2 > self.u1:
            raise DomainError("sampled profile needs u2 > u1")
        h = (self.u2 - self.u1) / (values.size - 1)
        d1 = np.gradient(values, h, edge_order=2)
        object.__setattr__(self, "samples", values)
        object.__setattr__(self, "_d1", d1)
        object.__setattr__(self, "_d2", np.gradient(d1, h, edge_order=2))

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.u1, self.u2, self.samples.size)

    def value(self, u):
        return np.interp(u, self.nodes, self.samples)

    def derivative(self, u):
        return np.interp(u, self.nodes, self._d1)

    def second_derivative(self, u):
        return np.interp(u, self.nodes, self._d2)


@dataclass(frozen=True)
class ChannelSpec:
    """
    Channel phi(u, v) = alpha(u) + s(u, v) N(u), s = v0 + v w / 2, v in [-1, 1]
    """
    base: PlaneCurve
    v0: ScalarProfile
    w: ScalarProfile
    d0: float = 1.0
    u1: Optional[float] = None
    u2: Optional[float] = None

    def __post_init__(self):
        u1 = self.base.u1 if self.u1 is None else float(self.u1)
        u2 = self.base.u2 if self.u2 is None else float(self.u2)
        if not u2 > u1:
            raise DomainError(f"empty channel domain [{u1!r}, {u2!r}]")
        self.base.check_domain([u1, u2])
        if not self.d0 > 0:
            raise DomainError(f"diffusion coefficient must be positive, got {self.d0!r}")
        object.__setattr__(self, "u1", u1)
        object.__setattr__(self, "u2", u2)

    @property
    def length(self) -> float:
        return self.u2 - self.u1

    def check_domain(self, u):
        u = np.asarray(u, dtype=float)
        slack = 1e-12 * max(1.0, abs(self.length))
        if np.any(u < self.u1 - slack) or np.any(u > self.u2 + slack):
            raise DomainError(f"u outside channel domain [{self.u1!r}, {self.u2!r}]")
        return u

    def s(self, u, v):
        """Signed normal offset of the fiber point at (u, v)"""
        return self.v0(u) + v * self.w(u) / 2


@dataclass(frozen=True)
class WallData:
    """Middle and wall curves with their u-derivatives at one u"""
    u: float
    alpha0: complex
    alpha1: complex
    alpha2: complex
    dalpha0: complex
    dalpha1: complex
    dalpha2: complex
    frame: FrenetFrame
    ddalpha1: Optional[complex] = None
    ddalpha2: Optional[complex] = None

    @property
    def width_vector(self) -> complex:
        return self.alpha2 - self.alpha1
