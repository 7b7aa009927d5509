"""Verification reports."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..types import TwistConvention


class PartialCharacter(BaseModel):
    """Truncated generating function of partitions with parts at most m."""

    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=0, description="Largest allowed part")
    coefficients: Tuple[int, ...] = Field(min_length=1, description="p_m(0), ..., p_m(k_max)")

    @property
    def k_max(self) -> int:
        """Highest level kept."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        """Return p_m(k)."""
        return self.coefficients[k]


class MatchEntry(BaseModel):
    """Nearest exact eigenvalue to one Bethe energy."""

    model_config = ConfigDict(frozen=True)

    bethe_energy: float
    nearest: float
    gap: float = Field(ge=0.0)
    index: int = Field(ge=0, description="Position of the nearest eigenvalue")
    matched: bool


class MatchReport(BaseModel):
    """Comparison of Bethe energies with an exact spectrum."""

    model_config = ConfigDict(frozen=True)

    L: int
    M: int
    gamma: float
    phi: float
    tol: float
    convention: TwistConvention = TwistConvention.HERMITIAN
    entries: Tuple[MatchEntry, ...] = ()
    note: Optional[str] = Field(default=None, description="Remarks about the twist convention")

    @property
    def all_matched(self) -> bool:
        """True when no entry exceeds the tolerance."""
        return all(entry.matched for entry in self.entries)

    @property
    def unmatched(self) -> List[MatchEntry]:
        """Entries beyond the tolerance."""
        return [entry for entry in self.entries if not entry.matched]

    @property
    def max_gap(self) -> float:
        """Largest gap, 0 for an empty report."""
        return max((entry.gap for entry in self.entries), default=0.0)


class DegeneracyLevel(BaseModel):
    """Enumerated versus expected count at one descendant level."""

    model_config = ConfigDict(frozen=True)

    k: int = Field(ge=0)
    enumerated: int = Field(ge=0)
    expected: int = Field(ge=0)

    @property
    def ok(self) -> bool:
        """Counts agree."""
        return self.enumerated == self.expected


class DegeneracyReport(BaseModel):
    """Descendant counts against the partial character."""

    model_config = ConfigDict(frozen=True)

    L: int
    n_plus: int
    n_minus: int
    gamma: float
    m: int
    levels: Tuple[DegeneracyLevel, ...]

    @property
    def mismatches(self) -> List[DegeneracyLevel]:
        """Levels where the counts differ."""
        return [level for level in self.levels if not level.ok]

    @property
    def ok(self) -> bool:
        """True when every level agrees."""
        return not self.mismatches


class CheckResult(BaseModel):
    """Outcome of one numerical verification."""

    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    value: Optional[float] = None
    target: Optional[float] = None
    tolerance: Optional[float] = None
    detail: str = ""


class VerifyReport(BaseModel):
    """Aggregate of verification checks."""

    model_config = ConfigDict(frozen=True)

    checks: Tuple[CheckResult, ...] = ()

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)
