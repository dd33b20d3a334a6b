"""
Source encoding for the transition model.

The same function builds the source for exported training data and for
generation, so the two can never drift apart.
"""

from typing import Tuple

from src.exceptions import SchemaError
from src.models.constants import TRANSITION_SOURCE_FUTURE, TRANSITION_SOURCE_PAST
from src.utils.validation import _require_non_empty


def encode_triple_source(past: str, future: str) -> str:
    """'past: {past} future: {future}', with no escaping."""
    _require_non_empty(past=past, future=future)
    return f"{TRANSITION_SOURCE_PAST}{past}{TRANSITION_SOURCE_FUTURE}{future}"


def decode_triple_source(source: str) -> Tuple[str, str]:
    """
    Inverse of encode_triple_source.

    The future separator is searched right to left, so a past utterance may
    itself contain " future: ".
    """
    if not source.startswith(TRANSITION_SOURCE_PAST):
        raise SchemaError(f"source does not start with {TRANSITION_SOURCE_PAST!r}")
    split = source.rfind(TRANSITION_SOURCE_FUTURE)
    if split < len(TRANSITION_SOURCE_PAST):
        raise SchemaError(f"source has no {TRANSITION_SOURCE_FUTURE.strip()!r} separator")
    return source[len(TRANSITION_SOURCE_PAST):split], source[split + len(TRANSITION_SOURCE_FUTURE):]
