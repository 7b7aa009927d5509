"""Tests for kernel functions."""

import cmath
import math

import numpy as np
import pytest

from xxzlab.exceptions import DomainError, PoleError
from xxzlab.kernel import (
    double_zero_index,
    is_double_zero,
    kernel_constants,
    kernel_fourier_r,
    kernel_fourier_s,
    kernel_fourier_s_derivative,
    omega_set,
    r_fn,
    r_prime,
    s_fn,
    s_prime,
    sigma_inf,
    sigma_inf_fourier,
    theta,
    theta_fourier,
    theta_prime,
    z_inf,
    z_inf_inverse,
)
from xxzlab.utils.quadrature import integrate_line

GAMMAS = [0.3 * math.pi, 0.5 * math.pi, 0.55 * math.pi, 0.8 * math.pi]


def _random_gammas(count: int, seed: int = 7) -> list:
    """Anisotropies away from the zeros of sin(pi^2 / (2 gamma))."""
    rng = np.random.default_rng(seed)
    gammas = []
    while len(gammas) < count:
        gamma = float(rng.uniform(0.05 * math.pi, 0.95 * math.pi))
        if abs(math.sin(math.pi**2 / (2.0 * gamma))) > 1e-3:
            gammas.append(gamma)
    return gammas


@pytest.mark.parametrize("gamma", GAMMAS)
def test_s_is_odd_with_limit(gamma: float) -> None:
    """Test s is odd and tends to 1/2 - gamma/(2 pi)."""
    lam = np.linspace(-4.0, 4.0, 17)
    np.testing.assert_allclose(s_fn(lam, gamma), -s_fn(-lam, gamma), atol=1e-16)
    assert s_fn(50.0, gamma) == pytest.approx(0.5 - gamma / (2.0 * math.pi), abs=1e-15)


@pytest.mark.parametrize("gamma", GAMMAS)
def test_r_matches_principal_log(gamma: float) -> None:
    """Test r against its logarithmic definition."""
    for lam in np.linspace(-3.0, 3.0, 13):
        ratio = -cmath.sinh(complex(lam, gamma)) / cmath.sinh(complex(lam, -gamma))
        expected = (-cmath.log(ratio) / (2j * math.pi)).real
        assert r_fn(float(lam), gamma) == pytest.approx(expected, abs=1e-14)


def test_r_vanishes_at_half_pi() -> None:
    """Test r is identically zero at gamma = pi/2."""
    lam = np.linspace(-5.0, 5.0, 11)
    assert np.max(np.abs(r_fn(lam, math.pi / 2))) < 1e-15


@pytest.mark.parametrize("gamma", GAMMAS)
def test_derivatives_match_finite_differences(gamma: float) -> None:
    """Test s' and r' against central differences."""
    h = 1e-6
    lam = np.linspace(-2.0, 2.0, 9)
    ds = (s_fn(lam + h, gamma) - s_fn(lam - h, gamma)) / (2 * h)
    dr = (r_fn(lam + h, gamma) - r_fn(lam - h, gamma)) / (2 * h)
    np.testing.assert_allclose(s_prime(lam, gamma), ds, atol=1e-8)
    np.testing.assert_allclose(r_prime(lam, gamma), dr, atol=1e-8)


def test_theta_rejects_bad_parameter() -> None:
    """Test the kernel parameter must lie in (0, pi)."""
    with pytest.raises(DomainError):
        theta(0.5, 0.0)
    with pytest.raises(DomainError):
        theta_prime(0.5, math.pi)


def test_theta_prime_large_argument() -> None:
    """Test the stable form does not overflow."""
    assert theta_prime(1000.0, 0.4) == 0.0
    assert np.all(np.isfinite(theta_prime(np.array([-800.0, 800.0]), 0.4)))


def test_r_prime_sign() -> None:
    """Test r' changes sign at gamma = pi/2."""
    assert r_prime(0.3, 0.4 * math.pi) > 0
    assert r_prime(0.3, 0.6 * math.pi) < 0


@pytest.mark.parametrize("gamma", GAMMAS)
def test_sigma_normalization(gamma: float) -> None:
    """Test the root density integrates to 1/2."""
    total = integrate_line(lambda lam: float(sigma_inf(lam, gamma)), scale=gamma / math.pi)
    assert total == pytest.approx(0.5, abs=1e-10)


def test_sigma_fourier_at_zero() -> None:
    """Test the density transform at the origin."""
    assert sigma_inf_fourier(0.0, 1.0) == pytest.approx(0.5)


@pytest.mark.parametrize("gamma", GAMMAS)
def test_z_inf_limits_and_derivative(gamma: float) -> None:
    """Test z_inf is the antiderivative of sigma_inf with limits +-1/4."""
    assert z_inf(0.0, gamma) == 0.0
    assert z_inf(100.0, gamma) == pytest.approx(0.25, abs=1e-15)
    h = 1e-6
    lam = np.linspace(-2.0, 2.0, 9)
    dz = (z_inf(lam + h, gamma) - z_inf(lam - h, gamma)) / (2 * h)
    np.testing.assert_allclose(sigma_inf(lam, gamma), dz, atol=1e-8)


@pytest.mark.parametrize("gamma", GAMMAS)
def test_z_inf_inverse(gamma: float) -> None:
    """Test the inverse counting function."""
    lam = np.linspace(-4.0, 4.0, 33)
    np.testing.assert_allclose(z_inf_inverse(z_inf(lam, gamma), gamma), lam, atol=1e-9)
    assert isinstance(z_inf_inverse(0.1, gamma), float)


def test_z_inf_inverse_domain() -> None:
    """Test |x| >= 1/4 is rejected."""
    with pytest.raises(DomainError):
        z_inf_inverse(0.25, 1.0)
    with pytest.raises(DomainError):
        z_inf_inverse(np.array([0.0, -0.3]), 1.0)


def test_fourier_identity_at_fermi_point() -> None:
    """Test 1 + r'^(i pi/gamma) = 0 for random anisotropies."""
    for gamma in _random_gammas(20):
        v_F = math.pi / gamma
        assert abs(1.0 + kernel_fourier_r(1j * v_F, gamma)) < 1e-10


@pytest.mark.parametrize("omega", [0.7, 2.5 + 0.3j, 0.4j, -1.1])
def test_fourier_factorization(omega: complex) -> None:
    """Test 1 + r'^ = 2 s'^ cosh(gamma w / 2)."""
    gamma = 0.55 * math.pi
    lhs = 1.0 + kernel_fourier_r(omega, gamma)
    rhs = 2.0 * kernel_fourier_s(omega, gamma) * cmath.cosh(gamma * omega / 2.0)
    assert abs(lhs - rhs) < 1e-12


def test_fourier_matches_quadrature() -> None:
    """Test the closed-form transform against direct integration."""
    a, omega = 0.7, 1.3
    numeric = integrate_line(lambda x: float(theta_prime(x, a)) * math.cos(omega * x))
    assert theta_fourier(omega, a).real == pytest.approx(numeric, abs=1e-9)


def test_fourier_values_at_zero() -> None:
    """Test transforms at the origin."""
    gamma = 0.55 * math.pi
    assert kernel_fourier_s(0.0, gamma) == pytest.approx((math.pi - gamma) / math.pi)
    assert kernel_fourier_r(0.0, gamma) == pytest.approx((math.pi - 2 * gamma) / math.pi)


def test_fourier_large_real_argument() -> None:
    """Test the exponential branch for large real frequencies."""
    gamma = 0.55 * math.pi
    value = kernel_fourier_s(40.0, gamma)
    expected = math.exp(-gamma * 40.0 / 2.0)
    assert value.real == pytest.approx(expected, rel=1e-10)


def test_fourier_pole() -> None:
    """Test the pole at w = 2i."""
    with pytest.raises(PoleError) as exc_info:
        kernel_fourier_s(2j, 0.55 * math.pi)
    assert exc_info.value.omega == 2j


def test_fourier_derivative_matches_finite_difference() -> None:
    """Test the derivative of s'^."""
    gamma = 0.55 * math.pi
    h = 1e-6
    for omega in (0.8, 0.5j, 1.0 + 0.2j):
        fd = (kernel_fourier_s(omega + h, gamma) - kernel_fourier_s(omega - h, gamma)) / (2 * h)
        assert abs(kernel_fourier_s_derivative(omega, gamma) - fd) < 1e-7


def test_kernel_constants() -> None:
    """Test constants at gamma = pi/2."""
    k = kernel_constants(math.pi / 2)
    assert k.r_inf == 0.0
    assert k.alpha == 0.25
    assert k.v_F == 2.0
    assert k.g == 1.0


def test_double_zero_detection() -> None:
    """Test gamma = pi/n detection."""
    assert double_zero_index(math.pi / 5) == 5
    assert double_zero_index(math.pi / 2) == 2
    assert double_zero_index(0.55 * math.pi) is None
    assert is_double_zero(math.pi / 3)
    assert not is_double_zero(1.0)


def test_omega_set() -> None:
    """Test the zero set at gamma = pi/2."""
    points = omega_set(math.pi / 2, 6.0)
    assert points == [0j, -2j, 2j, -4j, 4j, -6j, 6j]


def test_omega_set_generic() -> None:
    """Test the Fermi points are the smallest nonzero zeros for gamma > pi/3."""
    gamma = 0.55 * math.pi
    v_F = math.pi / gamma
    points = omega_set(gamma, 3.0 * v_F)
    assert points[0] == 0j
    assert points[1:3] == [complex(0, -v_F), complex(0, v_F)]
    with pytest.raises(DomainError):
        omega_set(gamma, 0.0)


@pytest.mark.parametrize("bad", [0.0, math.pi, -1.0])
def test_gamma_domain(bad: float) -> None:
    """Test gamma outside (0, pi) is rejected."""
    with pytest.raises(DomainError):
        s_fn(0.1, bad)
