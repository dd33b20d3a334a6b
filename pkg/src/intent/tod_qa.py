"""
TOD-QA training data.

Intent-annotated task-oriented dialogues become yes/no QA examples: at every
user turn, every cataloged intent's base question is answered YES if the
intent is active there and NO otherwise. NO examples are then downsampled per
dialogue.
"""

import logging
import random
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.exceptions import DataError
from src.intent.detector import format_context
from src.models.constants import DEFAULT_NEGATIVE_RATIO, QA_TRAINER_DEFAULTS
from src.models.enums import QALabel, Speaker
from src.models.record_types import TodQaRecord
from src.models.types import IntentQuestionSet, QAExample, SgdDialogue
from src.utils.files import write_ndjson, write_training_manifest
from src.utils.seeding import stable_hash

logger = logging.getLogger(__name__)


def _dialogue_examples(dialogue: SgdDialogue, catalog: Sequence[IntentQuestionSet]) -> List[QAExample]:
    known = {question_set.intent.name for question_set in catalog}
    examples: List[QAExample] = []
    for turn_index, turn in enumerate(dialogue.turns):
        if turn.speaker != Speaker.USER:
            continue
        for intent_name in turn.active_intents:
            if intent_name not in known:
                raise DataError.unknown_intent(intent_name, dialogue.dialogue_id, turn_index)
        context_text = format_context(dialogue.turns[:turn_index + 1])
        for question_set in catalog:
            active = question_set.intent.name in turn.active_intents
            examples.append(QAExample(
                context_text=context_text,
                question=question_set.base_question,
                answer=QALabel.YES if active else QALabel.NO,
            ))
    return examples


def _downsample(examples: List[QAExample], negative_ratio: float, rng: random.Random) -> List[QAExample]:
    positives = sum(1 for example in examples if example.answer == QALabel.YES)
    negative_positions = [index for index, example in enumerate(examples) if example.answer == QALabel.NO]
    keep = min(len(negative_positions), int(negative_ratio * positives))
    kept_negatives = set(rng.sample(negative_positions, keep))
    return [
        example for index, example in enumerate(examples)
        if example.answer == QALabel.YES or index in kept_negatives
    ]


def build_tod_qa(
    annotated_dialogues: Sequence[SgdDialogue],
    catalog: Sequence[IntentQuestionSet],
    negative_ratio: Optional[float] = DEFAULT_NEGATIVE_RATIO,
    seed: int = 0,
) -> List[QAExample]:
    """
    Build TOD-QA examples.

    Args:
        annotated_dialogues: Dialogues with per-user-turn active intents
        catalog: Intents to ask about (base questions only)
        negative_ratio: NO examples kept per YES example in each dialogue;
            None keeps every NO example
        seed: Downsampling seed

    Returns:
        Examples in (dialogue, turn, catalog) order

    Raises:
        DataError: A turn is annotated with an intent outside the catalog
    """
    examples: List[QAExample] = []
    for dialogue in annotated_dialogues:
        dialogue_examples = _dialogue_examples(dialogue, catalog)
        if negative_ratio is not None:
            rng = random.Random(stable_hash(seed, dialogue.dialogue_id))
            dialogue_examples = _downsample(dialogue_examples, negative_ratio, rng)
        examples.extend(dialogue_examples)

    positives = sum(1 for example in examples if example.answer == QALabel.YES)
    logger.info(f"Built {len(examples)} TOD-QA examples ({positives} yes) from {len(annotated_dialogues)} dialogues")
    return examples


def write_tod_qa(path: str | Path, examples: Sequence[QAExample], sources: Dict[str, Any]) -> int:
    """Write examples as NDJSON plus a manifest with the QA trainer defaults."""
    count = write_ndjson(path, (
        TodQaRecord(context=example.context_text, question=example.question, answer=example.answer.value)
        for example in examples
    ))
    write_training_manifest(path, "tod_qa", count, QA_TRAINER_DEFAULTS, sources)
    logger.info(f"Wrote {count} TOD-QA examples to {path}")
    return count
