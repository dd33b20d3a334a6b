"""
Dialogue invariant checks.

``validate`` reports every violated invariant instead of raising, so callers can
log, count or reject dialogues as they see fit. It is a pure function of the
dialogue.
"""

from typing import List

from src.models.constants import DEFAULT_TRANSITION_CANDIDATES
from src.models.enums import Phase, Speaker
from src.models.types import Dialogue, ValidationReport, Violation

_PHASE_RANK = {Phase.CHITCHAT: 0, Phase.TRANSITION: 1, Phase.TOD: 2}


def validate(dialogue: Dialogue) -> ValidationReport:
    """
    Check a dialogue against the turn and dialogue invariants.

    Args:
        dialogue: Dialogue to check

    Returns:
        ValidationReport listing each violation with its turn index (empty when valid)
    """
    violations: List[Violation] = []
    turns = dialogue.turns

    for index, turn in enumerate(turns):
        if not turn.text.strip():
            violations.append(Violation(rule="turn_text", message=f"empty text at turn {index}", turn_index=index))
        if turn.phase == Phase.TRANSITION and turn.speaker != Speaker.SALES:
            violations.append(Violation(
                rule="transition_speaker",
                message=f"transition turn {index} must be spoken by SALES",
                turn_index=index,
            ))
        if index > 0 and turn.speaker == turns[index - 1].speaker:
            violations.append(Violation(
                rule="alternation",
                message=f"alternation violated at turn {index}",
                turn_index=index,
            ))

    transition_indices = [index for index, turn in enumerate(turns) if turn.phase == Phase.TRANSITION]
    if len(transition_indices) > 1:
        violations.append(Violation(
            rule="single_transition",
            message=f"multiple transition turns at {transition_indices}",
            turn_index=transition_indices[1],
        ))

    for index in range(1, len(turns)):
        if _PHASE_RANK[turns[index].phase] < _PHASE_RANK[turns[index - 1].phase]:
            violations.append(Violation(
                rule="phase_order",
                message=f"phase order violated at turn {index}",
                turn_index=index,
            ))

    has_transition = bool(transition_indices)
    if has_transition and dialogue.intent is None:
        violations.append(Violation(rule="intent", message="transition turn present but intent is missing"))
    if not has_transition and dialogue.intent is not None:
        violations.append(Violation(rule="intent", message="intent set but no transition turn"))

    candidates = dialogue.transition_candidates
    if candidates:
        if len(candidates) != DEFAULT_TRANSITION_CANDIDATES:
            violations.append(Violation(
                rule="candidates",
                message=f"transition_candidates must hold 0 or {DEFAULT_TRANSITION_CANDIDATES} entries, got {len(candidates)}",
            ))
        if not has_transition:
            violations.append(Violation(rule="candidates", message="transition_candidates given without a transition turn"))
        elif turns[transition_indices[0]].text not in candidates:
            violations.append(Violation(
                rule="candidates",
                message="transition turn text is not one of transition_candidates",
                turn_index=transition_indices[0],
            ))

    return ValidationReport(dialogue_id=dialogue.id, violations=tuple(violations))
