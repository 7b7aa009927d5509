"""Tests for value models."""

import math
from fractions import Fraction

import pytest
from pydantic import ValidationError as PydanticValidationError

from xxzlab.models import (
    AmplitudeFit,
    BetheNumberSet,
    CftPrediction,
    KernelConstants,
    ModelParams,
    ScanSeries,
    SectorSpectrum,
    SolverOptions,
    StateClassification,
    StateTemplate,
)
from xxzlab.types import StateKind


def test_model_params_valid() -> None:
    """Test valid parameters."""
    params = ModelParams(gamma=1.0, phi=0.25, L=8, M=4)
    assert params.L == 8
    assert params.phi == 0.25


@pytest.mark.parametrize(
    "data",
    [
        {"gamma": 0.0, "L": 8, "M": 4},
        {"gamma": math.pi, "L": 8, "M": 4},
        {"gamma": 1.0, "L": 9, "M": 4},
        {"gamma": 1.0, "L": 8, "M": 5},
        {"gamma": 1.0, "L": 8, "M": 0},
        {"gamma": 1.0, "L": 8, "M": 4, "phi": math.inf},
        {"gamma": 1.0, "L": 8, "M": 4, "extra": 1},
    ],
)
def test_model_params_invalid(data: dict) -> None:
    """Test invalid parameters are rejected."""
    with pytest.raises(PydanticValidationError):
        ModelParams(**data)


def test_model_params_frozen() -> None:
    """Test parameters are immutable."""
    params = ModelParams(gamma=1.0, L=8, M=4)
    with pytest.raises(PydanticValidationError):
        params.L = 10  # type: ignore[misc]


def test_bethe_number_set() -> None:
    """Test doubled representation."""
    numbers = BetheNumberSet(doubled=(-3, -1, 1, 5))
    assert numbers.M == 4
    assert numbers.halves == (Fraction(-3, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(5, 2))
    assert numbers.positive == (1, 5)
    assert numbers.negative == (-3, -1)
    assert numbers.mirror().doubled == (-5, -1, 1, 3)
    assert not numbers.is_symmetric()
    assert BetheNumberSet(doubled=(-1, 1)).is_symmetric()


def test_bethe_number_set_from_halves() -> None:
    """Test construction from half-integers."""
    numbers = BetheNumberSet.from_halves([Fraction(3, 2), Fraction(-1, 2)])
    assert numbers.doubled == (-1, 3)
    with pytest.raises(ValueError):
        BetheNumberSet.from_halves([Fraction(1, 3)])


@pytest.mark.parametrize("doubled", [(), (-2, 1), (1, -1), (1, 1)])
def test_bethe_number_set_invalid(doubled: tuple) -> None:
    """Test even, unordered and empty configurations are rejected."""
    with pytest.raises(PydanticValidationError):
        BetheNumberSet(doubled=doubled)


def test_state_classification() -> None:
    """Test vacancy counts must be multiples of 1/2."""
    cls = StateClassification(n_plus=1.0, n_minus=0.5, delta_plus_I=2, delta_minus_I=0)
    assert cls.charge_sum == 1.5
    assert cls.charge_difference == 0.5
    assert not cls.is_packed
    with pytest.raises(PydanticValidationError):
        StateClassification(n_plus=0.25, n_minus=0.0, delta_plus_I=0, delta_minus_I=0)


def test_state_template_requires_fields() -> None:
    """Test template kinds need their fields."""
    assert StateTemplate().kind == StateKind.GROUND
    with pytest.raises(PydanticValidationError):
        StateTemplate(kind=StateKind.NUMBERS)
    with pytest.raises(PydanticValidationError):
        StateTemplate(kind=StateKind.EXCITATION, n_plus=1.0)


def test_solver_options_bounds() -> None:
    """Test solver option bounds."""
    assert SolverOptions().retries == 2
    with pytest.raises(PydanticValidationError):
        SolverOptions(damping=0.0)
    with pytest.raises(PydanticValidationError):
        SolverOptions(tol=-1.0)


def test_kernel_constants_s_inf() -> None:
    """Test the limit of s."""
    k = KernelConstants(gamma=math.pi / 2, r_inf=0.0, v_F=2.0, g=1.0)
    assert k.s_inf == 0.25


def test_sector_spectrum_dimension() -> None:
    """Test one eigenvalue per basis state."""
    spectrum = SectorSpectrum(L=2, M=1, gamma=1.0, phi=0.0, eigenvalues=(-2.0, 2.0), dimension=2)
    assert spectrum.ground_energy == -2.0
    with pytest.raises(PydanticValidationError):
        SectorSpectrum(L=2, M=1, gamma=1.0, phi=0.0, eigenvalues=(-2.0,), dimension=2)


def test_scan_series_alignment() -> None:
    """Test scan columns must be aligned and L increasing."""
    series = ScanSeries(
        L_values=(8, 16),
        e_values=(-1.0, -1.0),
        P_values=(0.0, 0.0),
        z0_values=(0.0, 0.0),
        residuals=(0.0, 0.0),
        iterations=(3, 4),
    )
    assert len(series) == 2
    assert series.total_iterations == 7
    with pytest.raises(PydanticValidationError):
        ScanSeries(L_values=(8, 16), e_values=(-1.0,))
    with pytest.raises(PydanticValidationError):
        ScanSeries(
            L_values=(16, 8),
            e_values=(0.0, 0.0),
            P_values=(0.0, 0.0),
            z0_values=(0.0, 0.0),
            residuals=(0.0, 0.0),
            iterations=(1, 1),
        )


def test_cft_prediction_properties() -> None:
    """Test derived prediction values."""
    prediction = CftPrediction(
        gamma=1.0,
        phi=0.0,
        L=8,
        v_F=math.pi,
        g=1.0,
        e_inf=-1.0,
        z_L0=0.0,
        c=1.0,
        h=0.75,
        h_bar=0.25,
        e_L_pred=-1.0,
        P_L_pred=0.0,
        A_plus=0.0,
        A_minus=0.0,
    )
    assert prediction.scaling_coefficient == pytest.approx(-11.0)
    assert prediction.spin == pytest.approx(0.5)


def test_amplitude_fit_summary() -> None:
    """Test fit summary keys and non-negative error."""
    fit = AmplitudeFit(
        x_eff=1.0,
        L_values=(8, 16, 32),
        raw_amplitudes=(0.9, 0.95, 0.975),
        extrapolants=(1.0,),
        exponent=1.0,
        extrapolation_error=0.0,
    )
    assert fit.summary() == {
        "quantity": "energy",
        "x_eff": 1.0,
        "exponent": 1.0,
        "extrapolation_error": 0.0,
    }
    with pytest.raises(PydanticValidationError):
        AmplitudeFit(
            x_eff=1.0, L_values=(), raw_amplitudes=(), extrapolants=(), extrapolation_error=-1.0
        )
