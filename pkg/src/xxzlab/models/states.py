"""Bethe number configurations and their classification."""

from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..types import StateKind


class BetheNumberSet(BaseModel):
    """Strictly increasing half-integer Bethe numbers, stored doubled."""

    model_config = ConfigDict(frozen=True)

    doubled: Tuple[int, ...] = Field(min_length=1, description="2*I_k, odd and increasing")

    @field_validator("doubled")
    @classmethod
    def check_doubled(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        """Check that entries are odd and strictly increasing."""
        for d in v:
            if d % 2 == 0:
                raise ValueError(f"doubled Bethe number {d} is even; numbers must be half-integers")
        for a, b in zip(v, v[1:]):
            if a >= b:
                raise ValueError("doubled Bethe numbers must be strictly increasing")
        return v

    @classmethod
    def from_halves(cls, values: List[Fraction]) -> "BetheNumberSet":
        """Build from half-integer values.

        Args:
            values: Half-integers, e.g. Fraction(3, 2)

        Returns:
            BetheNumberSet: Sorted configuration
        """
        doubled = []
        for value in values:
            twice = Fraction(value) * 2
            if twice.denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            doubled.append(int(twice))
        return cls(doubled=tuple(sorted(doubled)))

    @property
    def M(self) -> int:
        """Number of Bethe numbers."""
        return len(self.doubled)

    @property
    def halves(self) -> Tuple[Fraction, ...]:
        """Exact Bethe numbers I_k."""
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def positive(self) -> Tuple[int, ...]:
        """Doubled positive numbers, increasing."""
        return tuple(d for d in self.doubled if d > 0)

    @property
    def negative(self) -> Tuple[int, ...]:
        """Doubled negative numbers, increasing."""
        return tuple(d for d in self.doubled if d < 0)

    def mirror(self) -> "BetheNumberSet":
        """Return the configuration reflected through zero."""
        return BetheNumberSet(doubled=tuple(sorted(-d for d in self.doubled)))

    def is_symmetric(self) -> bool:
        """Whether the configuration is its own mirror."""
        return self.mirror().doubled == self.doubled


class StateClassification(BaseModel):
    """Vacancy counts and descendant levels of a configuration."""

    model_config = ConfigDict(frozen=True)

    n_plus: float = Field(description="Vacancies among positive numbers, L/4 - card{I > 0}")
    n_minus: float = Field(description="Vacancies among negative numbers, L/4 - card{I < 0}")
    delta_plus_I: int = Field(ge=0, description="Displacement of positive numbers from packing")
    delta_minus_I: int = Field(ge=0, description="Displacement of negative numbers from packing")

    @field_validator("n_plus", "n_minus")
    @classmethod
    def check_half_integral(cls, v: float) -> float:
        """Vacancy counts are multiples of 1/2."""
        if (2.0 * v) != round(2.0 * v):
            raise ValueError(f"vacancy count {v} is not a multiple of 1/2")
        return v

    @property
    def is_packed(self) -> bool:
        """True for the primary (non-descendant) state of a vacancy sector."""
        return self.delta_plus_I == 0 and self.delta_minus_I == 0

    @property
    def charge_sum(self) -> float:
        """n_plus + n_minus."""
        return self.n_plus + self.n_minus

    @property
    def charge_difference(self) -> float:
        """n_plus - n_minus."""
        return self.n_plus - self.n_minus


class StateTemplate(BaseModel):
    """Recipe producing a Bethe number configuration for any chain length."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: StateKind = Field(default=StateKind.GROUND, description="How numbers are chosen")
    numbers: Optional[Tuple[int, ...]] = Field(
        default=None, description="Explicit doubled Bethe numbers (kind=numbers)"
    )
    n_plus: Optional[float] = Field(default=None, description="Vacancies on the positive side")
    n_minus: Optional[float] = Field(default=None, description="Vacancies on the negative side")
    delta_plus: int = Field(default=0, ge=0, description="Descendant level on the positive side")
    delta_minus: int = Field(default=0, ge=0, description="Descendant level on the negative side")

    @model_validator(mode="after")
    def check_kind_fields(self) -> "StateTemplate":
        """Check that the fields required by the kind are present."""
        if self.kind == StateKind.NUMBERS and not self.numbers:
            raise ValueError("kind 'numbers' requires explicit doubled numbers")
        if self.kind == StateKind.EXCITATION and (self.n_plus is None or self.n_minus is None):
            raise ValueError("kind 'excitation' requires n_plus and n_minus")
        return self
