"""
Tests for channel geometry and the cross-sectional functionals
"""
import math

import numpy as np
import pytest

from curveflux.core.channel import (
    area,
    check_validity,
    effective_density,
    effective_flux,
    gamma,
    jacobian,
    sigma,
    wall_circles,
    walls,
)
from curveflux.core.errors import DomainError, FocalPointError, ShapeError
from curveflux.core.estimators import d_zeroth
from curveflux.core.oracle import make_grid
from curveflux.models import ChannelSpec, Circle, PolynomialProfile, SampledProfile, SteadyField


@pytest.fixture
def curved():
    base = Circle(k=0.5, focal=2j, phase=0.3, u1=-1.0, u2=1.0)
    return ChannelSpec(
        base=base,
        v0=PolynomialProfile((0.1, 0.2)),
        w=PolynomialProfile((1.0, 0.1, 0.05)),
    )


class TestWalls:
    def test_strip(self, strip):
        data = walls(strip, 1.5)
        assert data.alpha1 == pytest.approx(1.5 - 1j)
        assert data.alpha2 == pytest.approx(1.5 + 1j)
        assert data.width_vector == pytest.approx(2j)

    def test_sloped_walls_on_line(self, make_line_channel):
        spec = make_line_channel(v0=(0.0, 0.3), w=(1.0,))
        data = walls(spec, 0.5)
        assert data.dalpha1 == pytest.approx(1 + 0.3j)
        assert data.dalpha2 == pytest.approx(1 + 0.3j)

    def test_annulus_radii(self, make_annulus):
        spec = make_annulus(k=1.0, w=1.0, u1=-1.0, u2=1.0)
        data = walls(spec, 0.0)
        assert data.alpha1 == pytest.approx(-0.5j)
        assert abs(data.alpha1 - 1j) == pytest.approx(1.5)
        assert abs(data.alpha2 - 1j) == pytest.approx(0.5)

    @pytest.mark.parametrize("u", [-0.4, 0.0, 0.6])
    def test_derivatives_match_differences(self, curved, u):
        h = 1e-5
        lo, mid, hi = walls(curved, u - h), walls(curved, u), walls(curved, u + h)
        for name in ("alpha0", "alpha1", "alpha2"):
            numeric = (getattr(hi, name) - getattr(lo, name)) / (2 * h)
            assert abs(numeric - getattr(mid, "d" + name)) < 1e-6
        for index in (1, 2):
            numeric = (getattr(hi, f"dalpha{index}") - getattr(lo, f"dalpha{index}")) / (2 * h)
            assert abs(numeric - getattr(mid, f"ddalpha{index}")) < 1e-6

    def test_outside_domain(self, strip):
        with pytest.raises(DomainError):
            walls(strip, 4.5)


class TestAreaDensity:
    def test_sigma_reduces_to_width(self, strip, make_annulus):
        assert sigma(strip, 2.0) == pytest.approx(2.0)
        assert sigma(make_annulus(k=1.0, w=0.6), 0.5) == pytest.approx(0.6)

    def test_sigma_offset_middle(self):
        base = Circle(k=1.0, focal=1j, u1=0.0, u2=1.0)
        spec = ChannelSpec(base=base, v0=PolynomialProfile((0.2,)), w=PolynomialProfile((0.5,)))
        assert sigma(spec, 0.3) == pytest.approx(0.4)

    def test_area(self, strip, make_line_channel):
        assert area(strip, 3.0) == pytest.approx(6.0)
        assert area(make_line_channel(w=(1.0, 1.0)), 1.0) == pytest.approx(1.5)

    def test_area_is_antiderivative_of_sigma(self, curved):
        h = 1e-3
        for u in (-0.5, 0.0, 0.5):
            numeric = (area(curved, u + h) - area(curved, u - h)) / (2 * h)
            assert numeric == pytest.approx(float(sigma(curved, u)), rel=1e-6)

    def test_area_vectorized(self, strip):
        np.testing.assert_allclose(area(strip, [0.0, 1.0, 2.0]), [0.0, 2.0, 4.0], atol=1e-12)


class TestJacobian:
    def test_strip(self, strip):
        assert jacobian(strip, 1.0, 0.3) == pytest.approx(1.0)

    def test_annulus_inner_wall(self, make_annulus):
        assert jacobian(make_annulus(k=1.0, w=1.0), 0.5, 1.0) == pytest.approx(0.25)

    def test_focal_point_reached(self, make_annulus):
        with pytest.raises(FocalPointError) as excinfo:
            jacobian(make_annulus(k=1.0, w=2.0), 0.5, 1.0)
        assert excinfo.value.u == pytest.approx(0.5)

    def test_matches_determinant_of_map(self, curved):
        u, v, h = 0.2, 0.4, 1e-6

        def phi(a, b):
            data = walls(curved, a)
            return complex(curved.base.position(a)) + float(curved.s(a, b)) * data.frame.N

        phi_u = (phi(u + h, v) - phi(u - h, v)) / (2 * h)
        phi_v = (phi(u, v + h) - phi(u, v - h)) / (2 * h)
        det = (np.conj(phi_u) * phi_v).imag
        assert jacobian(curved, u, v) == pytest.approx(det, rel=1e-6)


class TestGamma:
    def test_annulus(self, make_annulus):
        assert gamma(make_annulus(k=1.0, w=1.0), 0.5) == pytest.approx(math.log(3))

    def test_straight(self, strip):
        assert gamma(strip, 1.0) == pytest.approx(2.0)

    def test_consistent_with_zeroth(self, curved):
        for u in (-0.8, 0.0, 0.7):
            expected = curved.d0 * gamma(curved, u) / sigma(curved, u)
            assert d_zeroth(curved, u) == pytest.approx(float(expected), rel=1e-12)


class TestValidity:
    def test_valid(self, curved):
        check_validity(curved)

    def test_negative_width(self, make_line_channel):
        with pytest.raises(DomainError, match="width must be positive"):
            check_validity(make_line_channel(w=(0.5, -1.0)))

    def test_focal_point(self, make_annulus):
        with pytest.raises(FocalPointError):
            check_validity(make_annulus(k=1.0, w=2.5))


class TestWallCircles:
    def test_annulus_is_concentric(self, make_annulus):
        pair, flags = wall_circles(make_annulus(k=1.0, w=1.0), 0.5)
        assert flags == []
        assert abs(pair.f1 - 1j) < 1e-12
        assert abs(pair.f2 - 1j) < 1e-12
        assert pair.r1 == pytest.approx(1.5)
        assert pair.r2 == pytest.approx(0.5)

    def test_strip_falls_back_to_large_circles(self, strip):
        pair, flags = wall_circles(strip, 1.0)
        assert flags == ["straight_wall_1", "straight_wall_2"]
        assert pair.r1 == pytest.approx(2e8)
        assert pair.f2 - pair.f1 == pytest.approx(2j)


class TestSampledProfile:
    def test_matches_polynomial(self):
        u = np.linspace(0.0, 2.0, 2001)
        sampled = SampledProfile(samples=1 + 0.5 * u * u, u1=0.0, u2=2.0)
        assert float(sampled(1.3)) == pytest.approx(1 + 0.5 * 1.69, abs=1e-6)
        assert float(sampled.derivative(1.3)) == pytest.approx(1.3, abs=1e-5)
        assert float(sampled.second_derivative(1.3)) == pytest.approx(1.0, abs=1e-3)


class TestEffectiveFunctionals:
    def test_uniform_field_gives_area_density(self, curved):
        grid = make_grid(curved, nu=16, nv=17)
        field = SteadyField(grid=grid, P=np.ones(grid.shape))
        np.testing.assert_allclose(effective_density(field, curved), sigma(curved, grid.u), rtol=1e-12)
        np.testing.assert_allclose(effective_flux(field, curved), 0.0, atol=1e-12)

    def test_odd_field_in_strip(self, strip):
        grid = make_grid(strip, nu=16, nv=9)
        field = SteadyField(grid=grid, P=np.broadcast_to(grid.v, grid.shape).copy())
        np.testing.assert_allclose(effective_density(field, strip), 0.0, atol=1e-12)

    def test_linear_field_in_strip(self, strip):
        grid = make_grid(strip, nu=16, nv=9)
        P = np.broadcast_to(grid.u[:, None], grid.shape).copy()
        field = SteadyField(grid=grid, P=P)
        np.testing.assert_allclose(effective_flux(field, strip), -2.0, rtol=1e-12)

    def test_annulus_radial_log(self, make_annulus):
        spec = make_annulus(k=1.0, w=1.0)
        grid = make_grid(spec, nu=16, nv=65)
        P = np.broadcast_to(np.log(1 - grid.v / 2), grid.shape).copy()
        expected = 1.125 * math.log(1.5) + 0.125 * math.log(2) - 0.5
        np.testing.assert_allclose(effective_density(SteadyField(grid=grid, P=P), spec), expected, atol=1e-7)

    def test_annulus_angular_flux(self, make_annulus):
        spec = make_annulus(k=1.0, w=1.0, d0=2.0)
        grid = make_grid(spec, nu=16, nv=65)
        P = np.broadcast_to(grid.u[:, None], grid.shape).copy()
        j = effective_flux(SteadyField(grid=grid, P=P), spec)
        np.testing.assert_allclose(j, -2.0 * math.log(3), rtol=1e-6)

    def test_shape_mismatch(self, strip):
        grid = make_grid(strip, nu=16, nv=9)
        with pytest.raises(ShapeError):
            effective_density(SteadyField(grid=grid, P=np.zeros((16, 11))), strip)
