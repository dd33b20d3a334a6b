"""
Schema-guided task-oriented dialogue corpus reader.

Reads the published layout (directories of ``dialogues_*.json`` files, each a
list of dialogues, plus ``schema.json`` service definitions). SYSTEM turns map
to the SALES speaker. When raw (lexicalized) data is supplied, annotated slot
spans are replaced by ``[slot_name]`` tokens.
"""

import json
import logging
import re
from pathlib import Path
from typing import Dict, List, Tuple

from src.exceptions import DataError
from src.models.constants import NONE_INTENT, SLOT_TOKEN_PATTERN
from src.models.enums import Speaker
from src.models.record_types import SgdDialogueRecord, SgdTurnRecord
from src.models.types import SgdDialogue, SgdTurn
from src.utils.text import normalize_whitespace

logger = logging.getLogger(__name__)

_SPEAKERS = {"USER": Speaker.USER, "SYSTEM": Speaker.SALES}
_SLOT_TOKEN = re.compile(SLOT_TOKEN_PATTERN)


def slot_token(slot_name: str) -> str:
    return "[" + re.sub(r"[^a-z_]", "_", slot_name.lower()) + "]"


def delexicalize_utterance(turn: SgdTurnRecord) -> str:
    """Replace every annotated slot span of a raw SGD turn with its slot token."""
    utterance = turn["utterance"]
    spans = []
    for frame in turn.get("frames", []):
        for span in frame.get("slots", []):
            start, end = span.get("start"), span.get("exclusive_end")
            if isinstance(start, int) and isinstance(end, int) and 0 <= start < end <= len(utterance):
                spans.append((start, end, span["slot"]))

    # right to left so earlier offsets stay valid; overlapping spans keep the first
    spans.sort(key=lambda item: (item[0], -item[1]))
    kept: List[Tuple[int, int, str]] = []
    for span in spans:
        if not kept or span[0] >= kept[-1][1]:
            kept.append(span)
    for start, end, slot in reversed(kept):
        if _SLOT_TOKEN.fullmatch(utterance[start:end]):
            continue
        utterance = utterance[:start] + slot_token(slot) + utterance[end:]
    return utterance


def parse_dialogue(record: SgdDialogueRecord, source: str, position: int, delexicalize: bool = True) -> SgdDialogue:
    """Convert one SGD dialogue record."""
    try:
        dialogue_id = str(record["dialogue_id"])
        raw_turns = record["turns"]
    except (KeyError, TypeError) as e:
        raise DataError(f"Record {position} is missing {e}", source=source) from e

    turns: List[SgdTurn] = []
    for turn_index, raw in enumerate(raw_turns):
        speaker = _SPEAKERS.get(raw.get("speaker")) if isinstance(raw, dict) else None
        if speaker is None or "utterance" not in raw:
            raise DataError(
                f"Record {position} has a malformed turn",
                source=source,
                dialogue_id=dialogue_id,
                turn_index=turn_index,
            )
        text = delexicalize_utterance(raw) if delexicalize else raw["utterance"]
        active: List[str] = []
        if speaker == Speaker.USER:
            for frame in raw.get("frames", []):
                intent = frame.get("state", {}).get("active_intent")
                if intent and intent != NONE_INTENT and intent not in active:
                    active.append(intent)
        turns.append(SgdTurn(speaker=speaker, text=normalize_whitespace(text), active_intents=tuple(active)))

    return SgdDialogue(dialogue_id=dialogue_id, turns=tuple(turns))


def _dialogue_files(path: Path) -> List[Path]:
    if path.is_file():
        return [path]
    return sorted(path.rglob("dialogues_*.json"))


def read_sgd_dialogues(path: str | Path, delexicalize: bool = True) -> List[SgdDialogue]:
    """
    Read every dialogue under ``path`` (a directory or a single JSON file).

    Raises:
        DataError: With file and record position on parse failure
    """
    path = Path(path)
    if not path.exists():
        raise DataError(f"SGD path does not exist: {path}", source=str(path))

    dialogues: List[SgdDialogue] = []
    for file_path in _dialogue_files(path):
        try:
            records = json.loads(file_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise DataError(f"Invalid JSON at line {e.lineno}: {e.msg}", source=str(file_path)) from e
        if not isinstance(records, list):
            raise DataError("Expected a list of dialogues", source=str(file_path))
        for position, record in enumerate(records):
            dialogues.append(parse_dialogue(record, str(file_path), position, delexicalize))

    logger.info(f"Read {len(dialogues)} SGD dialogues from {path}")
    return dialogues


def read_sgd_ontology(path: str | Path) -> Dict[str, str]:
    """Intent name -> ontology description from every ``schema.json`` under ``path``."""
    path = Path(path)
    schema_files = [path] if path.is_file() and path.name == "schema.json" else sorted(path.rglob("schema.json")) if path.is_dir() else []
    descriptions: Dict[str, str] = {}
    for schema_file in schema_files:
        try:
            services = json.loads(schema_file.read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise DataError(f"Invalid JSON at line {e.lineno}: {e.msg}", source=str(schema_file)) from e
        for service in services:
            for intent in service.get("intents", []):
                if intent.get("name") and intent.get("description"):
                    descriptions.setdefault(intent["name"], intent["description"])
    return descriptions
