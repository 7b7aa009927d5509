"""Solved states, observables, predictions and fits."""

from typing import Any, Dict, Optional, Tuple

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .params import ModelParams
from .states import BetheNumberSet, StateTemplate


class BetheState(BaseModel):
    """Converged real solution of the logarithmic Bethe equations."""

    model_config = ConfigDict(frozen=True)

    params: ModelParams
    numbers: BetheNumberSet
    roots: Tuple[float, ...] = Field(description="Rapidities, strictly increasing")
    phi_eff: float = Field(description="Twist entering the counting function")
    residual_max: float = Field(ge=0.0, description="max_i |z_L(lambda_i) - I_i/L|")
    iterations: int = Field(ge=0, description="Newton iterations of the successful attempt")

    @model_validator(mode="after")
    def check_roots(self) -> "BetheState":
        """Roots match the numbers in count and order."""
        if len(self.roots) != self.numbers.M or self.numbers.M != self.params.M:
            raise ValueError("roots, numbers and params disagree on M")
        if any(a >= b for a, b in zip(self.roots, self.roots[1:])):
            raise ValueError("roots must be strictly increasing")
        return self

    @property
    def roots_array(self) -> npt.NDArray[np.float64]:
        """Roots as a numpy array."""
        return np.asarray(self.roots, dtype=np.float64)

    @property
    def L(self) -> int:
        """Chain length."""
        return self.params.L


class ObservableRecord(BaseModel):
    """Observables evaluated on a solved state."""

    model_config = ConfigDict(frozen=True)

    e_L: float = Field(description="Energy per site")
    E_L: float = Field(description="Total energy L * e_L")
    P_L: float = Field(description="Momentum, real convention p_L = i P_L")
    f_L: Dict[float, float] = Field(
        default_factory=dict, description="log|Lambda(i lambda)|/L keyed by lambda"
    )


class CftPrediction(BaseModel):
    """Closed-form finite-size predictions for a classified configuration."""

    model_config = ConfigDict(frozen=True)

    gamma: float
    phi: float = Field(description="Effective twist used by every formula")
    L: int
    v_F: float
    g: float
    e_inf: float
    z_L0: float = Field(description="z_L(0) at order 1/L")
    c: float = Field(description="1 - 12 phi^2 / g")
    h: float
    h_bar: float
    e_L_pred: float
    P_L_pred: float
    A_plus: float = Field(description="Amplitude at +i v_F")
    A_minus: float = Field(description="Amplitude at -i v_F")
    double_zero: bool = Field(default=False, description="gamma = pi/n for an integer n")

    @property
    def scaling_coefficient(self) -> float:
        """Coefficient multiplying -pi v_F / (6 L^2) in the energy."""
        return 1.0 - 12.0 * (self.h + self.h_bar)

    @property
    def spin(self) -> float:
        """h - h_bar."""
        return self.h - self.h_bar


class SectorSpectrum(BaseModel):
    """Spectrum of the Hamiltonian in a fixed magnetization sector."""

    model_config = ConfigDict(frozen=True)

    L: int = Field(ge=1)
    M: int = Field(ge=0)
    gamma: float
    phi: float
    eigenvalues: Tuple[float, ...] = Field(description="Ascending eigenvalues")
    dimension: int = Field(ge=1, description="binomial(L, M)")

    @model_validator(mode="after")
    def check_dimension(self) -> "SectorSpectrum":
        """One eigenvalue per basis state."""
        if len(self.eigenvalues) != self.dimension:
            raise ValueError("eigenvalue count does not match the sector dimension")
        return self

    @property
    def ground_energy(self) -> float:
        """Lowest eigenvalue."""
        return self.eigenvalues[0]


class ScanMetadata(BaseModel):
    """Configuration a scan was run with."""

    model_config = ConfigDict(frozen=True)

    gamma: float
    phi: float
    template: StateTemplate
    warm_start: bool = True


class ScanSeries(BaseModel):
    """Observables of one state family over a sequence of chain lengths."""

    model_config = ConfigDict(frozen=True)

    L_values: Tuple[int, ...] = ()
    e_values: Tuple[float, ...] = ()
    P_values: Tuple[float, ...] = ()
    z0_values: Tuple[float, ...] = Field(default=(), description="z_L(0) per chain length")
    residuals: Tuple[float, ...] = ()
    iterations: Tuple[int, ...] = ()
    metadata: Optional[ScanMetadata] = None

    @model_validator(mode="after")
    def check_aligned(self) -> "ScanSeries":
        """All columns have one entry per distinct, increasing L."""
        n = len(self.L_values)
        columns = (self.e_values, self.P_values, self.z0_values, self.residuals, self.iterations)
        if any(len(col) != n for col in columns):
            raise ValueError("scan columns are not aligned")
        if any(a >= b for a, b in zip(self.L_values, self.L_values[1:])):
            raise ValueError("L values must be distinct and increasing")
        return self

    def __len__(self) -> int:
        return len(self.L_values)

    @property
    def total_iterations(self) -> int:
        """Newton iterations summed over the scan."""
        return sum(self.iterations)


class AmplitudeFit(BaseModel):
    """Extrapolated 1/L^2 amplitude of a scan."""

    model_config = ConfigDict(frozen=True)

    quantity: str = Field(default="energy", description="energy or momentum")
    x_eff: float = Field(description="Extrapolated amplitude")
    L_values: Tuple[int, ...]
    raw_amplitudes: Tuple[float, ...]
    extrapolants: Tuple[float, ...] = Field(description="One estimate per successive triple")
    exponent: Optional[float] = Field(
        default=None, description="Fitted subleading power p of the last triple"
    )
    extrapolation_error: float = Field(ge=0.0)

    def summary(self) -> Dict[str, Any]:
        """Short JSON-ready summary."""
        return {
            "quantity": self.quantity,
            "x_eff": self.x_eff,
            "exponent": self.exponent,
            "extrapolation_error": self.extrapolation_error,
        }
