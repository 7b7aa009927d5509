"""Tests for exact diagonalization."""

import math

import numpy as np
import pytest

from xxzlab.ed import (
    build_and_diagonalize,
    hamiltonian_sector,
    match_bethe,
    one_magnon_energies,
    sector_basis,
)
from xxzlab.exceptions import DimensionError, ValidationError
from xxzlab.models import BetheNumberSet, ModelParams, SectorSpectrum
from xxzlab.observables import energy
from xxzlab.solver import solve
from xxzlab.states import ground_state_numbers
from xxzlab.types import TwistConvention


def test_sector_basis() -> None:
    """Test basis size and ordering."""
    basis = sector_basis(4, 2)
    assert basis == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
    assert len(sector_basis(10, 5)) == math.comb(10, 5)


def test_hamiltonian_is_hermitian() -> None:
    """Test the twisted matrix equals its conjugate transpose."""
    H = hamiltonian_sector(6, 3, 0.55 * math.pi, 0.3)
    assert H.dtype == np.complex128
    np.testing.assert_array_equal(H, H.conj().T)


def test_hamiltonian_real_at_integer_twist() -> None:
    """Test integer twists give the same real matrix."""
    H0 = hamiltonian_sector(6, 3, 1.0, 0.0)
    H1 = hamiltonian_sector(6, 3, 1.0, 1.0)
    assert H0.dtype == np.float64
    np.testing.assert_array_equal(H0, H1)


def test_two_site_spectrum() -> None:
    """Test L=2, M=1 at gamma = pi/2."""
    spectrum = build_and_diagonalize(2, 1, math.pi / 2, 0.0)
    np.testing.assert_allclose(spectrum.eigenvalues, [-2.0, 2.0], atol=1e-14)
    assert spectrum.dimension == 2


def test_empty_sector() -> None:
    """Test the fully polarized state has zero energy."""
    spectrum = build_and_diagonalize(8, 0, 1.0, 0.2)
    assert spectrum.eigenvalues == (0.0,)


@pytest.mark.parametrize("phi", [0.0, 0.3])
def test_one_magnon_closed_form(phi: float) -> None:
    """Test the M=1 sector against plane waves."""
    spectrum = build_and_diagonalize(7, 1, 0.7, phi)
    np.testing.assert_allclose(spectrum.eigenvalues, one_magnon_energies(7, 0.7, phi), atol=1e-12)


def test_spectrum_even_in_twist() -> None:
    """Test phi and -phi give the same spectrum."""
    a = build_and_diagonalize(8, 3, 0.55 * math.pi, 0.2)
    b = build_and_diagonalize(8, 3, 0.55 * math.pi, -0.2)
    np.testing.assert_allclose(a.eigenvalues, b.eigenvalues, atol=1e-12)


def test_dimension_cap() -> None:
    """Test chains beyond the dense limit are refused."""
    with pytest.raises(DimensionError):
        build_and_diagonalize(18, 9, 1.0, 0.0)


@pytest.mark.parametrize("L, M", [(1, 0), (8, 9), (8, -1)])
def test_invalid_sizes(L: int, M: int) -> None:
    """Test invalid sizes."""
    with pytest.raises(ValidationError):
        build_and_diagonalize(L, M, 1.0, 0.0)


@pytest.mark.parametrize("gamma", [0.3 * math.pi, 0.5 * math.pi, 0.55 * math.pi])
@pytest.mark.parametrize("phi", [0.0, 0.1])
@pytest.mark.parametrize("L", [8, 10, 12])
def test_bethe_ground_state_matches(gamma: float, phi: float, L: int) -> None:
    """Test the Bethe ground state is the lowest level of its sector."""
    M = L // 2
    state = solve(ModelParams(gamma=gamma, phi=phi, L=L, M=M), ground_state_numbers(L, M))
    spectrum = build_and_diagonalize(L, M, gamma, phi)
    report = match_bethe(spectrum, [L * energy(state)])
    assert report.all_matched
    assert report.entries[0].index == 0
    assert report.convention == TwistConvention.HERMITIAN


def test_one_magnon_bethe_levels() -> None:
    """Test single-root Bethe states reproduce the M=1 spectrum."""
    L, gamma = 6, math.pi / 2
    energies = []
    for doubled in (-3, 1, 3):
        state = solve(ModelParams(gamma=gamma, L=L, M=1), BetheNumberSet(doubled=(doubled,)))
        energies.append(L * energy(state))
    np.testing.assert_allclose(sorted(energies), [-2.0, -1.0, -1.0], atol=1e-12)
    report = match_bethe(build_and_diagonalize(L, 1, gamma, 0.0), energies)
    assert report.all_matched


def test_match_reports_unmatched() -> None:
    """Test energies away from the spectrum are flagged."""
    spectrum = SectorSpectrum(L=2, M=1, gamma=1.0, phi=0.0, eigenvalues=(-1.0, 1.0), dimension=2)
    report = match_bethe(spectrum, [-1.0 + 1e-12, 0.5], tol=1e-9)
    assert report.entries[0].matched
    assert report.entries[0].index == 0
    assert not report.entries[1].matched
    assert report.entries[1].gap == pytest.approx(0.5)
    assert [entry.bethe_energy for entry in report.unmatched] == [0.5]
    assert not report.all_matched
    assert "phi -> -phi" in report.note
