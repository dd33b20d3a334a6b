"""
Utility functions shared across the pipeline.

This package contains shared utility functions organized by functionality:
- text: whitespace/casing normalization and whole-word matching
- seeding: deterministic seed derivation
- validation: argument and record validation helpers
- files: JSON, NDJSON and manifest sidecar writers
"""
