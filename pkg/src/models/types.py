"""
Domain types for the dialogue synthesis pipeline.

These are immutable pydantic models: once constructed they are value objects
that can be shared freely between concurrent generation tasks. Structural
checks (types, enums, ranges) happen at construction; dialogue-level
invariants are reported by ``src.dialogue.validation.validate`` instead, so an
invalid dialogue can still be loaded and inspected.
"""

from typing import Annotated, Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .constants import (
    BASE_QUESTIONS,
    DEFAULT_END_TOKEN,
    DEFAULT_MAX_CHITCHAT_TURNS,
    DEFAULT_MAX_NEW_TOKENS,
    DEFAULT_MAX_TOD_TURNS,
    DEFAULT_MIN_CHITCHAT_TURNS,
    DEFAULT_TERMINATION_KEYWORDS,
    DEFAULT_TOP_K,
    DEFAULT_TOP_P,
    DEFAULT_TRANSITION_CANDIDATES,
    INTENT_DESCRIPTIONS,
    INTENT_ORDER,
    RANK_MAX,
    RANK_MIN,
    SCORE_MAX,
    SCORE_MIN,
    TASK1_QUESTIONS,
    TASK2_QUESTIONS,
)
from .enums import (
    BackendKind,
    BackendProvider,
    Detector,
    IntentName,
    Phase,
    Provenance,
    QALabel,
    RepetitionRule,
    Speaker,
    TerminationKind,
)
from src.utils.text import normalize_whitespace


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


# ============================================================================
# Dialogue data model
# ============================================================================

class IntentLabel(_Frozen):
    """A task-oriented intent and its natural-language description."""
    name: str
    description: str
    # Longer description from the SGD schema, when one was loaded
    ontology_description: Optional[str] = Field(default=None, exclude=True)

    @classmethod
    def from_name(cls, name: IntentName | str, ontology_description: Optional[str] = None) -> "IntentLabel":
        intent = IntentName(name)
        return cls(
            name=intent.value,
            description=INTENT_DESCRIPTIONS[intent],
            ontology_description=ontology_description,
        )

    @property
    def is_builtin(self) -> bool:
        return self.name in INTENT_ORDER

    def without_ontology(self) -> "IntentLabel":
        """Copy as stored in a dialogue (the ontology text is not serialized)."""
        return self.model_copy(update={"ontology_description": None})


def builtin_intents() -> List[IntentLabel]:
    """The six intents in declaration order."""
    return [IntentLabel.from_name(name) for name in IntentName]


class Turn(_Frozen):
    """One utterance."""
    speaker: Speaker
    text: str
    phase: Phase
    meta: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("text")
    @classmethod
    def _normalize_text(cls, value: str) -> str:
        return normalize_whitespace(value)


class Dialogue(_Frozen):
    """
    A synthesized dialogue: chit-chat, at most one transition turn, then TOD.

    ``transition_candidates`` holds either nothing or the five transitions
    shown to crowdworkers, one of which is the transition turn's text.
    """
    id: str
    seed: int
    provenance: Provenance
    intent: Optional[IntentLabel] = None
    transition_candidates: Tuple[str, ...] = ()
    turns: Tuple[Turn, ...]

    @property
    def transition_index(self) -> Optional[int]:
        for index, turn in enumerate(self.turns):
            if turn.phase == Phase.TRANSITION:
                return index
        return None

    def turns_in_phase(self, phase: Phase) -> List[Turn]:
        return [turn for turn in self.turns if turn.phase == phase]


class Violation(_Frozen):
    """One violated dialogue/turn invariant."""
    rule: str
    message: str
    turn_index: Optional[int] = None


class ValidationReport(_Frozen):
    """All invariant violations of one dialogue; empty when valid."""
    dialogue_id: str
    violations: Tuple[Violation, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    @property
    def messages(self) -> List[str]:
        return [violation.message for violation in self.violations]


class GroupStats(_Frozen):
    """Count and length summary of a group of dialogues."""
    count: int = 0
    average_length: Optional[float] = None
    min_length: Optional[int] = None
    max_length: Optional[int] = None
    average_chitchat_length: Optional[float] = None


class CorpusStats(_Frozen):
    """Corpus statistics grouped by intent and by provenance."""
    per_intent: Dict[str, GroupStats]
    per_provenance: Dict[str, GroupStats]
    total: GroupStats


# ============================================================================
# Model backends
# ============================================================================

class DecodingConfig(_Frozen):
    """Sampling settings for one generation call."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    top_k: int = Field(default=DEFAULT_TOP_K, ge=1)
    top_p: float = Field(default=DEFAULT_TOP_P, gt=0.0, le=1.0)
    max_new_tokens: int = Field(default=DEFAULT_MAX_NEW_TOKENS, ge=1)
    seed: int = 0

    def with_seed(self, seed: int) -> "DecodingConfig":
        return self.model_copy(update={"seed": seed})


class QAAnswer(_Frozen):
    """Yes/no answer with the backend's confidence in it."""
    label: QALabel
    confidence: float = Field(ge=0.0, le=1.0)


class BackendDescriptor(_Frozen):
    """How to build the backend for one pipeline role."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    kind: BackendKind
    name: str
    provider: BackendProvider = BackendProvider.MOCK
    endpoint: Optional[str] = None
    mock_script: Optional[str] = None
    decoding: DecodingConfig = Field(default_factory=DecodingConfig)

    @model_validator(mode="after")
    def _check_provider_fields(self) -> "BackendDescriptor":
        if self.provider == BackendProvider.REMOTE and not self.endpoint:
            raise ValueError("remote backends require an endpoint")
        if self.provider == BackendProvider.ANTHROPIC and self.kind not in (BackendKind.CHAT, BackendKind.PARAPHRASE):
            raise ValueError("anthropic backends only serve chat and paraphrase")
        return self


# ============================================================================
# Self-chat
# ============================================================================

class Persona(_Frozen):
    """Persona sentences forwarded to a chat backend."""
    sentences: Tuple[str, ...] = Field(min_length=1, max_length=5)
    role: Speaker

    @field_validator("sentences")
    @classmethod
    def _non_empty_sentences(cls, value: Tuple[str, ...]) -> Tuple[str, ...]:
        cleaned = tuple(normalize_whitespace(sentence) for sentence in value)
        if any(not sentence for sentence in cleaned):
            raise ValueError("persona sentences must be non-empty")
        return cleaned


class SelfChatConfig(_Frozen):
    """Length bounds and decoding for open-domain self-chat."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    max_chitchat_turns: int = Field(default=DEFAULT_MAX_CHITCHAT_TURNS, ge=1)
    min_chitchat_turns: int = Field(default=DEFAULT_MIN_CHITCHAT_TURNS, ge=1)
    decoding: DecodingConfig = Field(default_factory=DecodingConfig)

    @model_validator(mode="after")
    def _check_bounds(self) -> "SelfChatConfig":
        if self.min_chitchat_turns > self.max_chitchat_turns:
            raise ValueError("min_chitchat_turns must not exceed max_chitchat_turns")
        return self


# ============================================================================
# Intent detection
# ============================================================================

class IntentQuestionSet(_Frozen):
    """Detection questions for one intent."""
    intent: IntentLabel
    base_question: str
    paraphrases: Tuple[str, ...] = ()

    @property
    def questions(self) -> Tuple[str, ...]:
        return (self.base_question, *self.paraphrases)

    @property
    def is_canonical(self) -> bool:
        """Whether the base question is the hand-written one for a built-in intent."""
        if not self.intent.is_builtin:
            return False
        return BASE_QUESTIONS[IntentName(self.intent.name)] == self.base_question


class DetectionResult(_Frozen):
    """The intent detected at a user turn."""
    intent: IntentLabel
    confidence: float = Field(ge=0.0, le=1.0)
    trigger_question: str
    turn_index: int


class QAExample(_Frozen):
    """One TOD-QA training example."""
    context_text: str
    question: str
    answer: QALabel


# ============================================================================
# Transition generation
# ============================================================================

class TransitionTriple(_Frozen):
    """Past user utterance, future user utterance, and the transition between them."""
    past: str = Field(min_length=1)
    future: str = Field(min_length=1)
    target: str = Field(min_length=1)


class SkipReport(_Frozen):
    """Records skipped by a dataset builder and why."""
    kept: int = 0
    skipped: Dict[str, str] = Field(default_factory=dict)

    @property
    def skipped_count(self) -> int:
        return len(self.skipped)

    def summary(self) -> str:
        return f"{self.kept} kept, {self.skipped_count} skipped"


# ============================================================================
# TOD continuation
# ============================================================================

class SgdTurn(_Frozen):
    """One turn of an external task-oriented dialogue."""
    speaker: Speaker
    text: str
    active_intents: Tuple[str, ...] = ()


class SgdDialogue(_Frozen):
    """An external task-oriented dialogue (delexicalized)."""
    dialogue_id: str
    turns: Tuple[SgdTurn, ...]

    @property
    def intents(self) -> List[str]:
        seen: List[str] = []
        for turn in self.turns:
            for intent in turn.active_intents:
                if intent not in seen:
                    seen.append(intent)
        return seen


class SgdIndex(_Frozen):
    """Task-oriented dialogues grouped by intent name."""
    buckets: Dict[str, Tuple[SgdDialogue, ...]] = Field(default_factory=dict)

    def size(self, intent_name: str) -> int:
        return len(self.buckets.get(intent_name, ()))


class TerminationPolicy(_Frozen):
    """When simulator self-play stops."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    keywords: Tuple[str, ...] = Field(default=DEFAULT_TERMINATION_KEYWORDS, min_length=1)
    end_token: str = DEFAULT_END_TOKEN
    repetition: RepetitionRule = RepetitionRule.EXACT_SAME_SPEAKER
    max_turns: int = Field(default=DEFAULT_MAX_TOD_TURNS, ge=2)


class TerminationReason(_Frozen):
    """Which termination condition fired, and on which turn."""
    kind: TerminationKind
    turn_index: int = Field(ge=0)
    detail: str = ""


# ============================================================================
# Crowdsourcing
# ============================================================================

Score = Annotated[int, Field(ge=SCORE_MIN, le=SCORE_MAX)]


class Task1Annotation(_Frozen):
    """One worker's ratings of a whole conversation."""
    dialogue_id: str
    worker_id: str
    q1_relevance: Score
    q2_aggressiveness: Score
    q3_overall: Score

    @property
    def item_id(self) -> str:
        return self.dialogue_id

    def scores(self) -> Dict[str, int]:
        return {question: getattr(self, question) for question in TASK1_QUESTIONS}


class Task2Annotation(_Frozen):
    """One worker's ratings of a transition, plus the best of the five candidates."""
    dialogue_id: str
    worker_id: str
    q1_right_time: Score
    q2_relevance: Score
    q3_aggressiveness: Score
    q4_overall: Score
    best_candidate_index: int = Field(ge=0, le=DEFAULT_TRANSITION_CANDIDATES - 1)

    @property
    def item_id(self) -> str:
        return self.dialogue_id

    def scores(self) -> Dict[str, int]:
        return {question: getattr(self, question) for question in TASK2_QUESTIONS}


class Task3Annotation(_Frozen):
    """One worker's ranking of the three detectors on a snippet (ties allowed)."""
    snippet_id: str
    worker_id: str
    rank_per_detector: Dict[Detector, int]
    own_intents: Tuple[str, ...] = ()

    @property
    def item_id(self) -> str:
        return self.snippet_id

    @field_validator("rank_per_detector")
    @classmethod
    def _check_ranks(cls, value: Dict[Detector, int]) -> Dict[Detector, int]:
        if set(value) != set(Detector):
            raise ValueError(f"ranks required for {[d.value for d in Detector]}")
        for detector, rank in value.items():
            if not RANK_MIN <= rank <= RANK_MAX:
                raise ValueError(f"{detector.value} rank {rank} outside [{RANK_MIN}, {RANK_MAX}]")
        return value


class Task3Snippet(_Frozen):
    """A dialogue prefix ending on a USER chit-chat turn, with each detector's intents."""
    snippet_id: str
    dialogue_id: str
    turns: Tuple[Turn, ...]
    detector_intents: Dict[Detector, Tuple[str, ...]] = Field(default_factory=dict)


class ScoreReport(_Frozen):
    """
    Task 1 / Task 2 score aggregates.

    ``distributions`` maps each question to a histogram of per-item means,
    keyed by the left edge of each 0.5-wide bin over [1, 5].
    """
    task: int
    n_records: int
    item_means: Dict[str, Dict[str, float]]
    question_means: Dict[str, Optional[float]]
    distributions: Dict[str, Dict[str, int]]
    # item id -> number of workers, for items without exactly three
    excluded: Dict[str, int] = Field(default_factory=dict)
    best_candidate: Dict[str, int] = Field(default_factory=dict)

    @property
    def n_items(self) -> int:
        return len(self.item_means)


class ProvenanceBreakdown(_Frozen):
    count: int
    question_means: Dict[str, Optional[float]]
    distributions: Dict[str, Dict[str, int]]


class ProvenanceComparison(_Frozen):
    groups: Dict[Provenance, ProvenanceBreakdown]
    missing: List[str] = Field(default_factory=list)

    def mean_shift(self, question: str) -> Optional[float]:
        """SIMULATION minus MERGE_SGD mean for one question."""
        merge = self.groups[Provenance.MERGE_SGD].question_means.get(question)
        simulation = self.groups[Provenance.SIMULATION].question_means.get(question)
        if merge is None or simulation is None:
            return None
        return simulation - merge


class RankSummary(_Frozen):
    mean: float
    std: float


class RankReport(_Frozen):
    """Per-detector mean rank and deviation."""
    detectors: Dict[Detector, RankSummary]
    n_records: int
    n_snippets: int
    # "population" or "sample", over "records" or "snippets"
    deviation: str
    unit: str
