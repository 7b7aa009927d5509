"""xxzlab - Bethe ansatz numerics for the twisted XXZ chain."""

from ._version import __version__
from .characters import movable_count, partial_character, verify_degeneracy
from .cft import conformal_weights, e_infinity, energy_prediction, momentum_prediction, predict
from .config import RunConfig, parse_gamma
from .ed import build_and_diagonalize, match_bethe
from .exceptions import (
    ConfigurationError,
    DimensionError,
    DomainError,
    NonConvergenceError,
    OrderViolationError,
    PoleError,
    QuadratureError,
    ScalingError,
    SolverError,
    ValidationError,
    XXZLabError,
)
from .kernel import kernel_constants
from .models import (
    AmplitudeFit,
    BetheNumberSet,
    BetheState,
    CftPrediction,
    ModelParams,
    ScanSeries,
    SectorSpectrum,
    SolverOptions,
    StateClassification,
)
from .observables import energy, momentum, observables, transfer_log_eigenvalue, w_L
from .scaling import extract_amplitude, scan
from .solver import counting_function, solve
from .states import classify, enumerate_excitations, ground_state_numbers
from .types import LogLevel, StateKind, TwistConvention

__all__ = [
    "__version__",
    # Models
    "AmplitudeFit",
    "BetheNumberSet",
    "BetheState",
    "CftPrediction",
    "ModelParams",
    "RunConfig",
    "ScanSeries",
    "SectorSpectrum",
    "SolverOptions",
    "StateClassification",
    # Operations
    "build_and_diagonalize",
    "classify",
    "conformal_weights",
    "counting_function",
    "e_infinity",
    "energy",
    "energy_prediction",
    "enumerate_excitations",
    "extract_amplitude",
    "ground_state_numbers",
    "kernel_constants",
    "match_bethe",
    "momentum",
    "momentum_prediction",
    "movable_count",
    "observables",
    "parse_gamma",
    "partial_character",
    "predict",
    "scan",
    "solve",
    "transfer_log_eigenvalue",
    "verify_degeneracy",
    "w_L",
    # Errors
    "ConfigurationError",
    "DimensionError",
    "DomainError",
    "NonConvergenceError",
    "OrderViolationError",
    "PoleError",
    "QuadratureError",
    "ScalingError",
    "SolverError",
    "ValidationError",
    "XXZLabError",
    # Types
    "LogLevel",
    "StateKind",
    "TwistConvention",
]
