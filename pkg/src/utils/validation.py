"""
Validation utilities.

General purpose validation functions for external records and call arguments.
"""

from typing import Dict, Any, List, Sequence

from src.exceptions import ValidationError, PreconditionError


def _validate_required_params(params: Dict[str, Any], required_keys: List[str]):
    """Validate that all required parameters are present and non-empty."""
    missing = [
        key for key in required_keys
        if key not in params or params[key] is None or (isinstance(params[key], str) and not params[key].strip())
    ]
    if missing:
        raise ValidationError.multiple_field_errors({key: "required" for key in missing})


def _require_non_empty(**arguments: Any) -> None:
    """Raise PreconditionError for the first empty string or sequence argument."""
    for name, value in arguments.items():
        if value is None:
            raise PreconditionError.empty_argument(name)
        if isinstance(value, str) and not value.strip():
            raise PreconditionError.empty_argument(name)
        if isinstance(value, Sequence) and not isinstance(value, str) and len(value) == 0:
            raise PreconditionError.empty_argument(name)
