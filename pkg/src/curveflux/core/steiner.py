"""
Harmonic potentials on circle pairs (the Steiner net).

For two circles C1, C2 the function P(z) = I log((z - q2) / (z - q1)) has
constant imaginary part on both circles, so its real part carries no flux
across them. Concentric circles use P(z) = i log(z - g) instead.
"""
import logging
from typing import List, Optional, Tuple

import numpy as np

from ..models.steiner import CirclePair, SteinerMap, SteinerMode
from .config import (
    CONCENTRIC_TOLERANCE,
    FIBER_PATH_POINTS,
    LEVEL_SAMPLES,
    LEVEL_TOLERANCE,
    TANGENCY_TOLERANCE,
)
from .errors import DegeneratePairError, PoleError

logger = logging.getLogger(__name__)

# samples closer than this (relative to the radius) to a pole are skipped
# when checking intersecting pairs, whose circles pass through both poles
_POLE_EXCLUSION = 1e-6


def clog1p(x):
    """log(1 + x) for complex x, accurate for small |x|"""
    x = np.asarray(x, dtype=complex)
    re, im = x.real, x.imag
    modulus = np.log1p(2 * re + re * re + im * im) / 2
    return (modulus + 1j * np.arctan2(im, 1 + re))[()]


def steiner_q(r1: float, r2: float, d: float) -> Optional[complex]:
    """
    Half distance between the limiting points (real) or the intersection
    points (imaginary) of two circles; None for concentric circles.
    """
    if d < 0:
        raise ValueError(f"centre distance must be non-negative, got {d!r}")
    if d == 0:
        return None
    radicand = (d - r1 - r2) * (d + r1 + r2) * (d - (r2 - r1)) * (d + (r2 - r1))
    return complex(np.sqrt(complex(radicand)) / (2 * d))


def _poles(pair: CirclePair, q: complex, c1: float, c2: float) -> Tuple[complex, complex]:
    shift = q * (pair.f2 - pair.f1)
    base = pair.f1 * c2 - pair.f2 * c1
    return (base + shift) / (c2 - c1), (base - shift) / (c2 - c1)


def build_map(pair: CirclePair) -> SteinerMap:
    """Construct the potential for a circle pair and verify its level sets"""
    f1, f2, r1, r2 = pair.f1, pair.f2, pair.r1, pair.r2
    d = pair.d
    scale = max(r1, r2)

    if d <= CONCENTRIC_TOLERANCE * scale:
        if abs(r1 - r2) <= CONCENTRIC_TOLERANCE * scale:
            raise DegeneratePairError("identical circles")
        return SteinerMap(pair=pair, mode=SteinerMode.CONCENTRIC, I=1j, g=f1)

    span = d + r1 + r2
    if min(abs(d - r1 - r2), abs(d - abs(r2 - r1))) <= TANGENCY_TOLERANCE * span:
        raise DegeneratePairError(f"tangent circles (d={d!r}, r1={r1!r}, r2={r2!r})")

    radicand = (d - r1 - r2) * (d + r1 + r2) * (d - (r2 - r1)) * (d + (r2 - r1))
    I = 1j if radicand > 0 else 1.0 + 0j
    q = steiner_q(r1, r2, d)
    # |d^2 + r1^2 - r2^2| / 2d == sqrt(q^2 + r1^2) without the cancellation
    c1 = abs(d * d + (r1 - r2) * (r1 + r2)) / (2 * d)
    c2_abs = abs(d * d + (r2 - r1) * (r2 + r1)) / (2 * d)
    J = 1 if (I == 1 and d < c1) or (I == 1j and d < r1 + r2) else -1

    flipped = False
    for attempt in range(2):
        c2 = J * c2_abs
        if c2 != c1:
            q1, q2 = _poles(pair, q, c1, c2)
            candidate = SteinerMap(
                pair=pair, mode=SteinerMode.TWO_POLE, q1=q1, q2=q2, I=I,
                q=q, c1=c1, c2=c2, J=J, j_flipped=flipped,
            )
            if q1 != q2 and _levels_hold(candidate):
                if flipped:
                    logger.debug("steiner J flipped to %d for %r", J, pair)
                return candidate
        J = -J
        flipped = True
    raise DegeneratePairError(f"no consistent Steiner map for {pair!r}")


def _levels_hold(steiner: SteinerMap) -> bool:
    try:
        return all(
            level_deviation(steiner, index) <= LEVEL_TOLERANCE
            for index in (1, 2)
        )
    except PoleError:
        return False


def map_terms(steiner: SteinerMap) -> List[Tuple[complex, complex]]:
    """P as a sum of A * log(z - c) terms, returned as (A, c) pairs"""
    if steiner.mode is SteinerMode.CONCENTRIC:
        return [(1j, steiner.g)]
    return [(steiner.I, steiner.q2), (-steiner.I, steiner.q1)]


def eval_P(steiner: SteinerMap, z):
    """P(z) on the principal branch of the log of a single ratio"""
    z = np.asarray(z, dtype=complex)
    if any(np.any(z == pole) for pole in steiner.poles):
        raise PoleError("potential evaluated at a pole")
    if steiner.mode is SteinerMode.CONCENTRIC:
        return (1j * np.log(z - steiner.g))[()]
    return (steiner.I * np.log((z - steiner.q2) / (z - steiner.q1)))[()]


def level_deviation(steiner: SteinerMap, index: int, n: int = LEVEL_SAMPLES) -> float:
    """
    Max deviation of Im(P) from its median over n points of circle `index`.

    For intersecting pairs Im(P) jumps by pi between the two arcs, so the
    deviation is measured modulo pi.
    """
    if n < 8:
        raise ValueError(f"need at least 8 samples, got {n}")
    centre, radius = steiner.pair.circle(index)
    z = centre + radius * np.exp(2j * np.pi * np.arange(n) / n)
    if steiner.intersecting:
        near = np.zeros(n, dtype=bool)
        for pole in steiner.poles:
            near |= np.abs(z - pole) < _POLE_EXCLUSION * radius
        z = z[~near]
    values = np.imag(eval_P(steiner, z))
    if steiner.intersecting:
        offset = np.angle(np.exp(2j * (values - values[0]))) / 2
        return float(np.max(np.abs(offset - np.median(offset))))
    return float(np.max(np.abs(values - np.median(values))))


def continuous_increment(
    steiner: SteinerMap,
    z_from: complex,
    z_to: complex,
    points: int = FIBER_PATH_POINTS,
) -> complex:
    """
    P(z_to) - P(z_from) along the segment between them, with the log arguments
    unwrapped step by step instead of taken from the principal branch.
    """
    return log_increment(map_terms(steiner), z_from, z_to, points)


def log_increment(terms, z_from: complex, z_to: complex, points: int = FIBER_PATH_POINTS) -> complex:
    """Continuous increment of sum A log(z - c) along a straight segment"""
    path = z_from + (z_to - z_from) * np.linspace(0.0, 1.0, points + 2)
    steps = np.diff(path)
    total = 0j
    for amplitude, centre in terms:
        rel = path[:-1] - centre
        if np.any(rel == 0) or (path[-1] == centre):
            raise PoleError("path passes through a pole")
        total += amplitude * np.sum(clog1p(steps / rel))
    return complex(total)
