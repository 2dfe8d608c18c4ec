"""
Pytest configuration and fixtures
"""
import math
from pathlib import Path

import pytest

from curveflux.models import ChannelSpec, Circle, Line, PolynomialProfile


def _poly(*coefficients):
    return PolynomialProfile(tuple(coefficients))


@pytest.fixture
def fixtures_dir():
    """Directory holding the TOML experiment configs used by the tests"""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def strip():
    """Straight uniform strip of width 2 on [0, 4]"""
    return ChannelSpec(base=Line(u1=0.0, u2=4.0), v0=_poly(0.0), w=_poly(2.0), d0=1.0)


@pytest.fixture
def make_annulus():
    """Symmetric constant-width channel on a circle of curvature k about i/k"""
    def factory(k=1.0, w=1.0, u1=0.0, u2=1.0, d0=1.0):
        base = Circle(k=k, focal=1j / k, u1=u1, u2=u2)
        return ChannelSpec(base=base, v0=_poly(0.0), w=_poly(w), d0=d0)
    return factory


@pytest.fixture
def make_line_channel():
    """Straight base with polynomial middle offset and width"""
    def factory(v0=(0.0,), w=(1.0,), u1=0.0, u2=1.0, d0=1.0):
        return ChannelSpec(base=Line(u1=u1, u2=u2), v0=_poly(*v0), w=_poly(*w), d0=d0)
    return factory


@pytest.fixture
def example_channel():
    """
    Tangent-line example: circle of curvature 0.2 through 0 with f = 5i and
    walls through p = -1 of slopes -0.4 and 0.4 at u = 0
    """
    def factory(u1=-0.5, u2=1.0):
        k, m1, m2 = 0.2, -0.4, 0.4
        ds1, ds2 = (1 - k * m1) * m1, (1 - k * m2) * m2
        v0 = _poly((m1 + m2) / 2, (ds1 + ds2) / 2)
        w = _poly(m2 - m1, ds2 - ds1)
        return ChannelSpec(base=Circle(k=k, focal=1j / k, u1=u1, u2=u2), v0=v0, w=w)
    return factory


@pytest.fixture
def unit_circle_samples():
    """Samples of the unit circle over [0, pi]"""
    n = 201
    return [
        (t, complex(math.cos(t), math.sin(t)))
        for t in (math.pi * i / (n - 1) for i in range(n))
    ]
