"""Validation utilities for xxzlab."""

import math
from typing import Any, Type, TypeVar, cast

from loguru import logger
from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from ..exceptions import DomainError, ValidationError

T = TypeVar("T", bound=BaseModel)


def validate_model(model_class: Type[T], data: Any) -> T:
    """Validate data against Pydantic model.

    Args:
        model_class: Pydantic model class
        data: Data to validate

    Returns:
        T: Validated model instance

    Raises:
        ValidationError: If validation fails
    """
    try:
        return cast(T, model_class.model_validate(data))
    except PydanticValidationError as e:
        raise ValidationError(_first_message(e), details={"errors": e.errors()}, cause=e) from e
    except Exception as e:
        logger.error(f"Model validation error: {str(e)}")
        raise ValidationError(f"Model validation failed: {str(e)}", cause=e) from e


def _first_message(error: PydanticValidationError) -> str:
    """Readable one-line message from a pydantic error."""
    errors = error.errors()
    if not errors:
        return str(error)
    first = errors[0]
    loc = ".".join(str(part) for part in first.get("loc", ()))
    msg = str(first.get("msg", "invalid value"))
    # pydantic prefixes messages raised from validators
    msg = msg.removeprefix("Value error, ")
    return f"{loc}: {msg}" if loc else msg


def check_gamma(gamma: float) -> float:
    """Validate an anisotropy angle.

    Args:
        gamma: Anisotropy angle in radians

    Returns:
        float: The angle as a float

    Raises:
        DomainError: If gamma is not in (0, pi)
    """
    value = float(gamma)
    if not (0.0 < value < math.pi):
        raise DomainError(f"gamma must lie in (0, pi), got {gamma!r}", details={"gamma": gamma})
    return value


def check_open_interval(value: float, low: float, high: float, name: str) -> float:
    """Validate low < value < high.

    Args:
        value: Value to check
        low: Exclusive lower bound
        high: Exclusive upper bound
        name: Name used in the error message

    Returns:
        float: The value as a float

    Raises:
        DomainError: If the value is outside the interval
    """
    v = float(value)
    if not (low < v < high):
        raise DomainError(
            f"{name} must lie in ({low:.17g}, {high:.17g}), got {value!r}",
            details={name: value, "low": low, "high": high},
        )
    return v
