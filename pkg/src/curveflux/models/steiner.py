"""
Circle pairs and the harmonic potentials built on them
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from ..core.errors import DegeneratePairError


@dataclass(frozen=True)
class CirclePair:
    f1: complex
    r1: float
    f2: complex
    r2: float

    def __post_init__(self):
        if not (self.r1 > 0 and self.r2 > 0):
            raise DegeneratePairError(f"radii must be positive, got {self.r1!r}, {self.r2!r}")
        if self.f1 == self.f2 and self.r1 == self.r2:
            raise DegeneratePairError("identical circles")

    @property
    def d(self) -> float:
        return abs(self.f2 - self.f1)

    def circle(self, index: int) -> Tuple[complex, float]:
        """(centre, radius) of circle 1 or 2"""
        if index == 1:
            return self.f1, self.r1
        if index == 2:
            return self.f2, self.r2
        raise ValueError(f"circle index must be 1 or 2, got {index!r}")


class SteinerMode(str, Enum):
    TWO_POLE = "TwoPole"
    CONCENTRIC = "Concentric"


@dataclass(frozen=True)
class SteinerMap:
    """
    P(z) = I log((z - q2) / (z - q1)) for TwoPole, P(z) = i log(z - g) for
    Concentric. Im(P) is constant on both circles of the pair.
    """
    pair: CirclePair
    mode: SteinerMode
    q1: Optional[complex] = None
    q2: Optional[complex] = None
    I: complex = 1j
    g: Optional[complex] = None
    q: Optional[complex] = None
    c1: Optional[float] = None
    c2: Optional[float] = None
    J: int = 1
    j_flipped: bool = False

    @property
    def poles(self) -> Tuple[complex, ...]:
        if self.mode is SteinerMode.CONCENTRIC:
            return (self.g,)
        return (self.q1, self.q2)

    @property
    def intersecting(self) -> bool:
        return self.mode is SteinerMode.TWO_POLE and self.I == 1
