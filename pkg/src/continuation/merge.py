"""Merge SGD: splice a sampled task-oriented dialogue after the transition turn."""

import logging
import random
from typing import List

from src.exceptions import DataError, EmptyBucketError
from src.models.constants import META_SGD_DIALOGUE
from src.models.enums import Phase, Speaker
from src.models.types import IntentLabel, SgdIndex, Turn

logger = logging.getLogger(__name__)


def merge_continuation(intent: IntentLabel, index: SgdIndex, seed: int) -> List[Turn]:
    """
    Sample one indexed dialogue for ``intent`` and return it as TOD turns.

    Turns before the first USER turn are dropped (the transition already
    speaks for the sales side); trailing turns are kept. The first returned
    turn records the source dialogue id.

    Raises:
        EmptyBucketError: No indexed dialogue carries the intent
        DataError: The sampled dialogue has no USER turn
    """
    bucket = index.buckets.get(intent.name, ())
    if not bucket:
        raise EmptyBucketError(intent.name)

    sampled = bucket[random.Random(seed).randrange(len(bucket))]
    start = next((position for position, turn in enumerate(sampled.turns) if turn.speaker == Speaker.USER), None)
    if start is None:
        raise DataError(
            f"Indexed dialogue '{sampled.dialogue_id}' has no USER turn", dialogue_id=sampled.dialogue_id
        )

    turns = []
    for offset, turn in enumerate(sampled.turns[start:]):
        meta = {META_SGD_DIALOGUE: sampled.dialogue_id} if offset == 0 else {}
        turns.append(Turn(speaker=turn.speaker, text=turn.text, phase=Phase.TOD, meta=meta))
    logger.debug(f"Merged SGD dialogue {sampled.dialogue_id} ({len(turns)} turns) for {intent.name}")
    return turns
