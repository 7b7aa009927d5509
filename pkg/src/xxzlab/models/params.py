"""Model and solver parameter models."""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..constants import (
    ALPHA,
    DEFAULT_DAMPING,
    DEFAULT_MAX_HALVINGS,
    DEFAULT_MAX_ITER,
    DEFAULT_SOLVE_RETRIES,
    DEFAULT_TOL,
)


class ModelParams(BaseModel):
    """Parameters of the twisted XXZ chain in a fixed magnetization sector."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    gamma: float = Field(gt=0.0, lt=math.pi, description="Anisotropy angle, Delta = -cos(gamma)")
    phi: float = Field(default=0.0, description="Boundary twist (dimensionless)")
    L: int = Field(ge=2, description="Number of sites")
    M: int = Field(ge=1, description="Number of Bethe roots (down spins)")

    @field_validator("phi")
    @classmethod
    def check_phi_finite(cls, v: float) -> float:
        """Reject non-finite twists."""
        if not math.isfinite(v):
            raise ValueError("phi must be finite")
        return v

    @field_validator("L")
    @classmethod
    def check_L_even(cls, v: int) -> int:
        """Only even chain lengths are supported."""
        if v % 2:
            raise ValueError("L must be even")
        return v

    @model_validator(mode="after")
    def check_sector(self) -> "ModelParams":
        """Check that the sector is at or below half filling."""
        if 2 * self.M > self.L:
            raise ValueError(f"M={self.M} exceeds L/2={self.L // 2}")
        return self


class KernelConstants(BaseModel):
    """Constants of the thermodynamic limit at a given anisotropy."""

    model_config = ConfigDict(frozen=True)

    gamma: float = Field(gt=0.0, lt=math.pi, description="Anisotropy angle")
    r_inf: float = Field(description="Limit of r at +infinity, 1/2 - gamma/pi")
    alpha: float = Field(default=ALPHA, description="Limit of z_inf at +infinity")
    v_F: float = Field(gt=1.0, description="Fermi velocity pi/gamma")
    g: float = Field(gt=0.0, lt=2.0, description="Coupling constant 1 + 2 r_inf")

    @property
    def s_inf(self) -> float:
        """Limit of s at +infinity."""
        return 0.5 - self.gamma / (2.0 * math.pi)


class SolverOptions(BaseModel):
    """Options of the damped Newton solver."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    tol: float = Field(default=DEFAULT_TOL, gt=0.0, description="Max-norm residual tolerance")
    max_iter: int = Field(default=DEFAULT_MAX_ITER, ge=1, description="Newton iteration cap")
    damping: float = Field(
        default=DEFAULT_DAMPING, gt=0.0, le=1.0, description="Initial Newton step fraction"
    )
    max_halvings: int = Field(
        default=DEFAULT_MAX_HALVINGS, ge=0, description="Backtracking step halvings per iteration"
    )
    retries: int = Field(
        default=DEFAULT_SOLVE_RETRIES,
        ge=0,
        description="Extra attempts with halved damping after a failed solve",
    )
