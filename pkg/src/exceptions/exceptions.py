"""
Custom exception classes for the SalesBot dialogue synthesis pipeline.

This module defines a hierarchy of exceptions that provide granular error handling
for the different failure modes of the pipeline: model backends, data schemas,
configuration, external corpora and crowdsourcing annotations.
"""

from typing import Optional, Dict, Any, List


class SalesBotError(Exception):
    """Base exception class for all pipeline errors."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        """
        Initialize the base exception.

        Args:
            message: Human-readable error message
            details: Optional dictionary containing additional error context
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} (Details: {self.details})"
        return self.message


# ============================================================================
# Model backend errors
# ============================================================================

class BackendError(SalesBotError):
    """
    Exception raised when a model backend fails to produce a value.

    Backend calls either return a well-formed value or raise one of these;
    partial results are never returned.
    """

    def __init__(
        self,
        message: str,
        backend: Optional[str] = None,
        status_code: Optional[int] = None,
        response_body: Optional[str] = None,
        endpoint: Optional[str] = None,
    ):
        details: Dict[str, Any] = {}
        if backend is not None:
            details['backend'] = backend
        if status_code is not None:
            details['status_code'] = status_code
        if response_body is not None:
            details['response_body'] = response_body
        if endpoint is not None:
            details['endpoint'] = endpoint

        super().__init__(message, details)
        self.backend = backend
        self.status_code = status_code
        self.response_body = response_body
        self.endpoint = endpoint


class TransportError(BackendError):
    """
    Exception raised when a remote inference endpoint cannot be reached.

    Carries the endpoint and the number of attempts made before giving up.
    """

    def __init__(
        self,
        message: str,
        endpoint: Optional[str] = None,
        attempts: int = 1,
        **kwargs
    ):
        super().__init__(message, endpoint=endpoint, **kwargs)
        self.attempts = attempts
        self.details['attempts'] = attempts

    @classmethod
    def unreachable(cls, endpoint: str, attempts: int, reason: str) -> "TransportError":
        """Create a TransportError after exhausting retries."""
        return cls(
            message=f"Inference endpoint {endpoint} unreachable after {attempts} attempt(s): {reason}",
            endpoint=endpoint,
            attempts=attempts,
        )


class GenerationError(BackendError):
    """Exception raised when a backend returns an empty or malformed generation."""

    @classmethod
    def empty_output(cls, backend: str) -> "GenerationError":
        """Create a GenerationError for an empty generation."""
        return cls(f"Backend '{backend}' produced an empty generation.", backend=backend)


# ============================================================================
# Data validation errors
# ============================================================================

class ValidationError(SalesBotError):
    """
    Exception raised for data validation failures.

    This occurs when inputs don't meet a schema or an operation's contract,
    such as missing required fields, values outside an enum, or violated
    preconditions.
    """

    def __init__(
        self,
        message: str,
        field_errors: Optional[Dict[str, str]] = None,
        invalid_fields: Optional[List[str]] = None
    ):
        details: Dict[str, Any] = {}
        if field_errors:
            details['field_errors'] = field_errors
        if invalid_fields:
            details['invalid_fields'] = invalid_fields

        super().__init__(message, details)
        self.field_errors = field_errors or {}
        self.invalid_fields = invalid_fields or []

    @classmethod
    def multiple_field_errors(cls, field_errors: Dict[str, str]) -> "ValidationError":
        """Create a ValidationError for multiple field validation failures."""
        fields = list(field_errors.keys())
        return cls(
            message="; ".join(f"{name}: {reason}" for name, reason in field_errors.items()),
            field_errors=field_errors,
            invalid_fields=fields
        )


class SchemaError(ValidationError):
    """Exception raised when a serialized record does not match the dialogue file format."""

    def __init__(self, message: str, line: Optional[int] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.line = line
        if line is not None:
            self.details['line'] = line


class PreconditionError(ValidationError):
    """Exception raised when an operation is called in violation of its contract."""

    @classmethod
    def empty_argument(cls, name: str) -> "PreconditionError":
        """Create a PreconditionError for an empty required argument."""
        return cls(f"{name} must be non-empty", invalid_fields=[name])


class ConfigError(ValidationError):
    """Exception raised for unknown keys, type mismatches or missing paths in a run config."""

    def __init__(self, message: str, key_path: Optional[str] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.key_path = key_path
        if key_path is not None:
            self.details['key_path'] = key_path


class CatalogError(ValidationError):
    """Exception raised when an intent question catalog cannot be built."""

    @classmethod
    def empty_description(cls, intent_name: str) -> "CatalogError":
        return cls(f"Intent '{intent_name}' has an empty description", invalid_fields=[intent_name])


class DataError(ValidationError):
    """
    Exception raised for malformed external corpora (SGD, OTTers, annotated TOD).

    Records the source position (file, dialogue id, turn index) when known.
    """

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        dialogue_id: Optional[str] = None,
        turn_index: Optional[int] = None,
    ):
        super().__init__(message)
        self.source = source
        self.dialogue_id = dialogue_id
        self.turn_index = turn_index
        for key, value in (("source", source), ("dialogue_id", dialogue_id), ("turn_index", turn_index)):
            if value is not None:
                self.details[key] = value

    @classmethod
    def unknown_intent(cls, intent_name: str, dialogue_id: str, turn_index: int) -> "DataError":
        return cls(
            f"Annotation names intent '{intent_name}' which is not in the catalog",
            dialogue_id=dialogue_id,
            turn_index=turn_index,
        )


class AnnotationError(ValidationError):
    """Exception raised when crowdsourcing annotations fail ingestion checks."""

    def __init__(self, message: str, rows: Optional[List[int]] = None, **kwargs):
        super().__init__(message, **kwargs)
        self.rows = rows or []
        if rows:
            self.details['rows'] = rows


class ScoreRangeError(AnnotationError):
    """Exception raised when an annotation score or rank is outside its allowed range."""

    @classmethod
    def out_of_range(cls, column: str, value: Any, low: int, high: int, row: int) -> "ScoreRangeError":
        return cls(
            f"Row {row}: {column}={value} outside [{low}, {high}]",
            rows=[row],
            invalid_fields=[column],
        )


class DuplicateAnnotationError(AnnotationError):
    """Exception raised when the same worker annotated the same item twice."""

    @classmethod
    def duplicate(cls, item_id: str, worker_id: str, rows: List[int]) -> "DuplicateAnnotationError":
        return cls(f"Duplicate annotation for item '{item_id}' by worker '{worker_id}'", rows=rows)


# ============================================================================
# Pipeline errors
# ============================================================================

class EmptyBucketError(SalesBotError):
    """Exception raised when Merge SGD has no indexed dialogue for the detected intent."""

    def __init__(self, intent_name: str):
        super().__init__(f"No indexed SGD dialogue for intent '{intent_name}'", {"intent": intent_name})
        self.intent_name = intent_name


class ExportError(SalesBotError):
    """Exception raised when a crowdsourcing export is missing prerequisites."""

    def __init__(self, message: str, offending_ids: Optional[List[str]] = None):
        super().__init__(message, {"offending_ids": offending_ids or []})
        self.offending_ids = offending_ids or []


class PartialResultError(SalesBotError):
    """
    Exception raised when a sequential generation loop fails midway.

    The turns produced before the failure are attached as ``partial`` for
    diagnostics; the original error is chained as ``__cause__``.
    """

    def __init__(self, message: str, partial: list, cause: Optional[BaseException] = None):
        super().__init__(message, {"partial_turns": len(partial)})
        self.partial = partial
        self.cause = cause


# Convenience function for creating appropriate exception from an inference response
def create_backend_exception(
    status_code: int,
    response_body: str,
    endpoint: Optional[str] = None,
    message: Optional[str] = None
) -> SalesBotError:
    """
    Create the appropriate exception based on HTTP status code and response.

    Args:
        status_code: HTTP status code from the inference server
        response_body: Raw response body
        endpoint: The endpoint that failed
        message: Optional custom message

    Returns:
        Appropriate exception instance based on the status code
    """
    if not message:
        message = f"Inference request failed with status {status_code}"

    if status_code in (401, 403):
        return BackendError(
            "Inference server rejected the credentials. Check SALESBOT_INFERENCE_TOKEN "
            "or SALESBOT_SERVICE_ACCOUNT_KEY_PATH.",
            status_code=status_code,
            response_body=response_body,
            endpoint=endpoint
        )
    elif status_code == 422 or 400 <= status_code < 500:
        return PreconditionError(f"Inference request rejected ({status_code}): {message}")
    elif 500 <= status_code < 600:
        return TransportError(
            f"Server error ({status_code}): the inference service is experiencing issues.",
            endpoint=endpoint,
            status_code=status_code,
            response_body=response_body,
        )
    else:
        return BackendError(
            message,
            status_code=status_code,
            response_body=response_body,
            endpoint=endpoint
        )
