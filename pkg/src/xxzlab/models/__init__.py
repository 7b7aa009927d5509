"""Value models."""

from typing import List

from .params import KernelConstants, ModelParams, SolverOptions
from .reports import (
    CheckResult,
    DegeneracyLevel,
    DegeneracyReport,
    MatchEntry,
    MatchReport,
    PartialCharacter,
    VerifyReport,
)
from .results import (
    AmplitudeFit,
    BetheState,
    CftPrediction,
    ObservableRecord,
    ScanMetadata,
    ScanSeries,
    SectorSpectrum,
)
from .states import BetheNumberSet, StateClassification, StateTemplate

__all__: List[str] = [
    "AmplitudeFit",
    "BetheNumberSet",
    "BetheState",
    "CftPrediction",
    "CheckResult",
    "DegeneracyLevel",
    "DegeneracyReport",
    "KernelConstants",
    "MatchEntry",
    "MatchReport",
    "ModelParams",
    "ObservableRecord",
    "PartialCharacter",
    "ScanMetadata",
    "ScanSeries",
    "SectorSpectrum",
    "SolverOptions",
    "StateClassification",
    "StateTemplate",
    "VerifyReport",
]
