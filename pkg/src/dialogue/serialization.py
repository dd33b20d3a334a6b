"""
Dialogue file format.

One JSON object per dialogue, UTF-8; corpora are newline-delimited JSON.
Unknown ``meta`` keys pass through untouched.
"""

import json
import logging
from pathlib import Path
from typing import Iterable, Iterator, List

from pydantic import ValidationError as PydanticValidationError

from src.exceptions import SchemaError, ValidationError
from src.models.types import Dialogue
from src.dialogue.validation import validate

logger = logging.getLogger(__name__)

_ERROR_REASONS = {
    "missing": "required",
    "enum": "not in enum",
    "int_type": "expected integer",
    "int_parsing": "expected integer",
    "string_type": "expected string",
    "dict_type": "expected object",
    "tuple_type": "expected array",
    "model_type": "expected object",
}


def _schema_error(error: PydanticValidationError, line: int | None = None) -> SchemaError:
    field_errors = {}
    messages = []
    for item in error.errors():
        path = ".".join(str(part) for part in item["loc"])
        names = [part for part in item["loc"] if isinstance(part, str)]
        field = names[-1] if names else "<root>"
        reason = _ERROR_REASONS.get(item["type"], item["msg"])
        field_errors[path or field] = reason
        messages.append(f"{field}: {reason}")
    prefix = f"line {line}: " if line is not None else ""
    return SchemaError(
        prefix + "; ".join(messages),
        line=line,
        field_errors=field_errors,
        invalid_fields=list(field_errors),
    )


def serialize(dialogue: Dialogue) -> bytes:
    """
    Encode a valid dialogue as one UTF-8 JSON object.

    Raises:
        ValidationError: If the dialogue violates any invariant
    """
    report = validate(dialogue)
    if not report.is_valid:
        raise ValidationError(
            f"Refusing to serialize invalid dialogue '{dialogue.id}': {'; '.join(report.messages)}"
        )
    return json.dumps(dialogue.model_dump(mode="json"), ensure_ascii=False).encode("utf-8")


def deserialize(data: bytes | str, line: int | None = None) -> Dialogue:
    """
    Decode one dialogue.

    Raises:
        SchemaError: Naming each missing or ill-typed field
    """
    try:
        payload = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise SchemaError(f"invalid JSON: {e}", line=line) from e
    if not isinstance(payload, dict):
        raise SchemaError("dialogue must be a JSON object", line=line)
    try:
        return Dialogue.model_validate(payload)
    except PydanticValidationError as e:
        raise _schema_error(e, line) from e


def iter_corpus(path: str | Path) -> Iterator[Dialogue]:
    """Yield dialogues from a newline-delimited JSON corpus, skipping blank lines."""
    with open(path, "rb") as handle:
        for line_number, raw in enumerate(handle, start=1):
            if raw.strip():
                yield deserialize(raw, line=line_number)


def read_corpus(path: str | Path) -> List[Dialogue]:
    corpus = list(iter_corpus(path))
    logger.info(f"Read {len(corpus)} dialogues from {path}")
    return corpus


def write_corpus(path: str | Path, dialogues: Iterable[Dialogue]) -> int:
    """Write dialogues as newline-delimited JSON; returns the number written."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    count = 0
    with open(path, "wb") as handle:
        for dialogue in dialogues:
            handle.write(serialize(dialogue) + b"\n")
            count += 1
    logger.info(f"Wrote {count} dialogues to {path}")
    return count
