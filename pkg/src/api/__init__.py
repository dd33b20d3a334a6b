"""
Remote inference access: HTTP client, credentials and per-task endpoint wrappers.
"""

from .auth import InferenceAuth
from .client import InferenceClient

__all__ = ["InferenceAuth", "InferenceClient"]
