"""
Zero-shot intent detection as yes/no question answering.

Every question of every intent is asked about the recent dialogue. A question
hits when the answer is YES with confidence at or above the threshold; an
intent scores the maximum confidence over its hits, and the best-scoring
intent wins with ties going to the earlier intent in the built-in order.
"""

import asyncio
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Protocol, Sequence, Tuple

from src.backends.base import QABackend
from src.exceptions import PreconditionError
from src.models.constants import DEFAULT_DETECTION_THRESHOLD, INTENT_ORDER
from src.models.enums import QALabel, Speaker
from src.models.types import DetectionResult, IntentQuestionSet, Turn

logger = logging.getLogger(__name__)


class _Utterance(Protocol):
    speaker: Speaker
    text: str


def format_context(turns: Sequence[_Utterance]) -> str:
    """Speaker-tagged lines, oldest first ("SALES: ..." / "USER: ...")."""
    return "\n".join(f"{turn.speaker.value}: {turn.text}" for turn in turns)


def tie_break_order(catalog: Sequence[IntentQuestionSet]) -> List[int]:
    """Catalog positions sorted built-in intents first, then catalog order."""
    def rank(position: int) -> Tuple[int, int]:
        name = catalog[position].intent.name
        if name in INTENT_ORDER:
            return (0, INTENT_ORDER.index(name))
        return (1, position)
    return sorted(range(len(catalog)), key=rank)


@dataclass(frozen=True)
class _IntentScore:
    position: int
    confidence: float
    question: str


async def _score_intents(
    turns: Sequence[Turn],
    catalog: Sequence[IntentQuestionSet],
    qa_backend: QABackend,
    threshold: float,
    window: Optional[int],
) -> List[_IntentScore]:
    if not turns or turns[-1].speaker != Speaker.USER:
        raise PreconditionError("intent detection requires the last turn to be a USER turn", invalid_fields=["turns"])
    if window is not None and window < 1:
        raise PreconditionError(f"window must be positive, got {window}", invalid_fields=["window"])

    context_turns = turns if window is None else turns[-window:]
    context_text = format_context(context_turns)

    asked = [(position, question) for position, question_set in enumerate(catalog) for question in question_set.questions]
    answers = await asyncio.gather(*(qa_backend.answer_question(context_text, question) for _, question in asked))

    best: Dict[int, _IntentScore] = {}
    for (position, question), answer in zip(asked, answers):
        if answer.label != QALabel.YES or answer.confidence < threshold:
            continue
        current = best.get(position)
        if current is None or answer.confidence > current.confidence:
            best[position] = _IntentScore(position, answer.confidence, question)

    # stable sort keeps tie-break order among equal scores
    ordered = [best[position] for position in tie_break_order(catalog) if position in best]
    return sorted(ordered, key=lambda score: -score.confidence)


def _to_result(score: _IntentScore, catalog: Sequence[IntentQuestionSet], turn_index: int) -> DetectionResult:
    return DetectionResult(
        intent=catalog[score.position].intent,
        confidence=score.confidence,
        trigger_question=score.question,
        turn_index=turn_index,
    )


async def detect_intent(
    turns: Sequence[Turn],
    catalog: Sequence[IntentQuestionSet],
    qa_backend: QABackend,
    threshold: float = DEFAULT_DETECTION_THRESHOLD,
    window: Optional[int] = None,
) -> Optional[DetectionResult]:
    """
    Detect the single best implicit intent at the latest USER turn.

    Args:
        turns: Dialogue so far; the last turn must be spoken by USER
        catalog: Question sets to ask
        qa_backend: Yes/no QA backend
        threshold: Minimum YES confidence for a hit
        window: Number of most recent turns used as context (None = all)

    Returns:
        The winning intent, or None when no question hits

    Raises:
        PreconditionError: Last turn is not a USER turn, or window < 1
    """
    scores = await _score_intents(turns, catalog, qa_backend, threshold, window)
    if not scores:
        return None
    result = _to_result(scores[0], catalog, len(turns) - 1)
    logger.debug(f"Detected {result.intent.name} ({result.confidence:.2f}) at turn {result.turn_index}")
    return result


async def detect_intent_all(
    turns: Sequence[Turn],
    catalog: Sequence[IntentQuestionSet],
    qa_backend: QABackend,
    threshold: float = DEFAULT_DETECTION_THRESHOLD,
    window: Optional[int] = None,
) -> List[DetectionResult]:
    """Every intent with at least one hit, best first (same ordering as detect_intent)."""
    scores = await _score_intents(turns, catalog, qa_backend, threshold, window)
    return [_to_result(score, catalog, len(turns) - 1) for score in scores]


class DetectionHook:
    """
    Self-chat stop hook that runs detection and keeps the last result.

    Returns True (stop) as soon as an intent is detected.
    """

    def __init__(
        self,
        catalog: Sequence[IntentQuestionSet],
        qa_backend: QABackend,
        threshold: float = DEFAULT_DETECTION_THRESHOLD,
        window: Optional[int] = None,
    ):
        self.catalog = catalog
        self.qa_backend = qa_backend
        self.threshold = threshold
        self.window = window
        self.result: Optional[DetectionResult] = None

    async def __call__(self, turns: Sequence[Turn]) -> bool:
        self.result = await detect_intent(turns, self.catalog, self.qa_backend, self.threshold, self.window)
        return self.result is not None
