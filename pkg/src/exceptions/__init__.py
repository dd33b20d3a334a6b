"""
Pipeline exception classes.

This package provides a comprehensive set of exception classes for handling
the error conditions of model backends, dialogue data, configuration and
crowdsourcing annotations.
"""

from .exceptions import (
    SalesBotError,
    BackendError,
    TransportError,
    GenerationError,
    ValidationError,
    SchemaError,
    PreconditionError,
    ConfigError,
    CatalogError,
    DataError,
    AnnotationError,
    ScoreRangeError,
    DuplicateAnnotationError,
    EmptyBucketError,
    ExportError,
    PartialResultError,
    create_backend_exception,
)

__all__ = [
    "SalesBotError",
    "BackendError",
    "TransportError",
    "GenerationError",
    "ValidationError",
    "SchemaError",
    "PreconditionError",
    "ConfigError",
    "CatalogError",
    "DataError",
    "AnnotationError",
    "ScoreRangeError",
    "DuplicateAnnotationError",
    "EmptyBucketError",
    "ExportError",
    "PartialResultError",
    "create_backend_exception",
]
