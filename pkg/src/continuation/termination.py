"""Termination conditions for simulator self-play."""

from typing import Optional, Sequence

from src.models.enums import Phase, TerminationKind
from src.models.types import TerminationPolicy, TerminationReason, Turn
from src.utils.text import first_matching_word, normalize_for_compare


def should_terminate(turns: Sequence[Turn], policy: TerminationPolicy) -> Optional[TerminationReason]:
    """
    Check the latest turn against the policy.

    Conditions in priority order: a keyword as a whole word (case-insensitive),
    the end token anywhere in the raw text, an exact normalized repeat of an
    earlier same-speaker turn, and the TOD turn cap.
    """
    if not turns:
        return None
    latest_index = len(turns) - 1
    latest = turns[latest_index]

    keyword = first_matching_word(latest.text, policy.keywords)
    if keyword is not None:
        return TerminationReason(kind=TerminationKind.KEYWORD, turn_index=latest_index, detail=keyword)

    if policy.end_token and policy.end_token in latest.text:
        return TerminationReason(kind=TerminationKind.END_TOKEN, turn_index=latest_index, detail=policy.end_token)

    normalized = normalize_for_compare(latest.text)
    for earlier_index, earlier in enumerate(turns[:latest_index]):
        if earlier.speaker == latest.speaker and normalize_for_compare(earlier.text) == normalized:
            return TerminationReason(
                kind=TerminationKind.REPETITION,
                turn_index=latest_index,
                detail=f"repeats turn {earlier_index}",
            )

    tod_turns = sum(1 for turn in turns if turn.phase == Phase.TOD)
    if tod_turns >= policy.max_turns:
        return TerminationReason(kind=TerminationKind.MAX_TURNS, turn_index=latest_index, detail=str(policy.max_turns))

    return None
