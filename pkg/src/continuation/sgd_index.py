"""SGD dialogues grouped by the target intents they are annotated with."""

import logging
import re
from pathlib import Path
from typing import Dict, List, Sequence

from src.dialogue.sgd import read_sgd_dialogues
from src.models.constants import INTENT_ORDER, SLOT_TOKEN_PATTERN
from src.models.enums import Speaker
from src.models.types import SgdDialogue, SgdIndex

logger = logging.getLogger(__name__)

_SLOT_TOKEN = re.compile(SLOT_TOKEN_PATTERN)


def slot_tokens_well_formed(text: str) -> bool:
    """True when every bracket in ``text`` belongs to a ``[slot_name]`` token."""
    remainder = _SLOT_TOKEN.sub("", text)
    return "[" not in remainder and "]" not in remainder


def _indexable(dialogue: SgdDialogue) -> bool:
    if not any(turn.speaker == Speaker.USER for turn in dialogue.turns):
        return False
    return all(slot_tokens_well_formed(turn.text) for turn in dialogue.turns)


def index_sgd(sgd_corpus: Sequence[SgdDialogue], intents: Sequence[str] = INTENT_ORDER) -> SgdIndex:
    """
    Bucket dialogues under every target intent they are annotated with.

    Dialogues without a user turn or with malformed slot tokens are left out.
    """
    targets = set(intents)
    buckets: Dict[str, List[SgdDialogue]] = {name: [] for name in intents}
    rejected = 0
    for dialogue in sgd_corpus:
        matched = [name for name in dialogue.intents if name in targets]
        if not matched:
            continue
        if not _indexable(dialogue):
            rejected += 1
            continue
        for name in matched:
            buckets[name].append(dialogue)

    index = SgdIndex(buckets={name: tuple(group) for name, group in buckets.items() if group})
    if rejected:
        logger.warning(f"Left {rejected} SGD dialogues out of the index (no user turn or malformed slot tokens)")
    if not index.buckets:
        logger.warning("SGD index is empty: no dialogue carries a target intent")
    else:
        logger.info("SGD index sizes: " + ", ".join(f"{name}={len(group)}" for name, group in index.buckets.items()))
    return index


def load_sgd_index(path: str | Path, delexicalize: bool = True) -> SgdIndex:
    return index_sgd(read_sgd_dialogues(path, delexicalize=delexicalize))
