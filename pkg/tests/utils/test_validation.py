"""Tests for validation utilities."""

import math
from typing import Any, Dict

import pytest
from pydantic import BaseModel, Field

from xxzlab.exceptions import DomainError, ValidationError
from xxzlab.models import ModelParams
from xxzlab.utils import check_gamma, check_open_interval, validate_model


class SampleModel(BaseModel):
    """Test model for validation."""

    name: str = Field(min_length=3)
    size: int = Field(ge=0, le=10)


def test_validate_model_success() -> None:
    """Test successful model validation."""
    data: Dict[str, Any] = {"name": "chain", "size": 4}
    result = validate_model(SampleModel, data)
    assert result.name == "chain"
    assert result.size == 4


def test_validate_model_invalid_size() -> None:
    """Test model validation with invalid size."""
    with pytest.raises(ValidationError) as exc_info:
        validate_model(SampleModel, {"name": "chain", "size": 11})
    assert "size" in str(exc_info.value)
    assert exc_info.value.details is not None
    assert exc_info.value.__cause__ is not None


def test_validate_model_strips_value_error_prefix() -> None:
    """Test validator messages are passed through readably."""
    with pytest.raises(ValidationError, match="L must be even") as exc_info:
        validate_model(ModelParams, {"gamma": 1.0, "L": 7, "M": 2})
    assert "Value error" not in str(exc_info.value)


def test_validate_model_sector() -> None:
    """Test sector above half filling."""
    with pytest.raises(ValidationError, match="exceeds L/2"):
        validate_model(ModelParams, {"gamma": 1.0, "L": 8, "M": 5})


def test_check_gamma() -> None:
    """Test anisotropy validation."""
    assert check_gamma(1) == 1.0
    for bad in (0.0, math.pi, -0.1, 4.0):
        with pytest.raises(DomainError):
            check_gamma(bad)


def test_check_open_interval() -> None:
    """Test open interval validation."""
    assert check_open_interval(0.5, 0.0, 1.0, "x") == 0.5
    with pytest.raises(DomainError, match="x must lie in"):
        check_open_interval(1.0, 0.0, 1.0, "x")
