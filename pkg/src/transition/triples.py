"""Training triples (past user utterance, future user utterance, transition) from dialogues."""

import logging
from typing import List, Optional, Sequence, Tuple

from src.models.constants import META_TEMPLATE
from src.models.enums import Phase, Speaker
from src.models.types import Dialogue, SkipReport, TransitionTriple

logger = logging.getLogger(__name__)


def triple_from_dialogue(dialogue: Dialogue) -> Tuple[Optional[TransitionTriple], str]:
    """The dialogue's triple, or None with the reason it has none."""
    transitions = [index for index, turn in enumerate(dialogue.turns) if turn.phase == Phase.TRANSITION]
    if len(transitions) != 1:
        return None, f"expected one transition turn, found {len(transitions)}"
    split = transitions[0]

    past = [turn for turn in dialogue.turns[:split] if turn.speaker == Speaker.USER and turn.phase == Phase.CHITCHAT]
    future = [turn for turn in dialogue.turns[split + 1:] if turn.speaker == Speaker.USER and turn.phase == Phase.TOD]
    if not past:
        return None, "no user chit-chat turn before the transition"
    if not future:
        return None, "no user task-oriented turn after the transition"

    return TransitionTriple(past=past[-1].text, future=future[0].text, target=dialogue.turns[split].text), ""


def restore_template(dialogue: Dialogue) -> Dialogue:
    """The dialogue with its transition turn reset to the template recorded in its meta, if any."""
    split = dialogue.transition_index
    if split is None:
        return dialogue
    turn = dialogue.turns[split]
    template = turn.meta.get(META_TEMPLATE)
    if not template or template == turn.text:
        return dialogue
    turns = list(dialogue.turns)
    turns[split] = turn.model_copy(update={"text": template})
    return dialogue.model_copy(update={"turns": tuple(turns)})


def build_training_triples(dialogues: Sequence[Dialogue]) -> Tuple[List[TransitionTriple], SkipReport]:
    """
    One triple per usable dialogue.

    Returns:
        Triples in corpus order, and a report of skipped dialogue ids with reasons
    """
    triples: List[TransitionTriple] = []
    skipped = {}
    for dialogue in dialogues:
        triple, reason = triple_from_dialogue(dialogue)
        if triple is None:
            logger.warning(f"Skipping dialogue {dialogue.id}: {reason}")
            skipped[dialogue.id] = reason
        else:
            triples.append(triple)
    return triples, SkipReport(kept=len(triples), skipped=skipped)
