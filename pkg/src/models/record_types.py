"""
TypedDict classes for the wire and file formats.

These correspond to raw JSON structures crossing the process boundary: the
remote inference protocol, exported training data, the catalog file and the
external corpora read by the pipeline. They are used for type safety and
documentation of the serialized forms; the in-memory domain types live in
types.py.
"""

from typing import Dict, List, Any, Literal, Union

from typing_extensions import NotRequired, TypedDict


# ============================================================================
# Remote inference protocol
# ============================================================================

class DecodingPayload(TypedDict):
    """Decoding settings as sent to the inference server."""
    top_k: int
    top_p: float
    max_new_tokens: int
    seed: int


class InferenceRequest(TypedDict):
    """Body of POST /generate."""
    task: Literal["chat", "qa", "paraphrase", "seq2seq"]
    inputs: Dict[str, Any]
    config: NotRequired[DecodingPayload]


class QAOutput(TypedDict):
    """QA output object returned by the inference server."""
    label: Literal["yes", "no"]
    confidence: float


class InferenceResponse(TypedDict):
    """Response of POST /generate."""
    output: Union[str, List[str], QAOutput]
    model: str


# ============================================================================
# Exported data
# ============================================================================

class TodQaRecord(TypedDict):
    """One line of the TOD-QA training file."""
    context: str
    question: str
    answer: Literal["yes", "no"]


class TransitionRecord(TypedDict):
    """One line of the transition training file."""
    source: str
    target: str


class CatalogRecord(TypedDict):
    """One entry of the question catalog file."""
    intent: str
    description: str
    base_question: str
    paraphrases: List[str]


class TrainingManifest(TypedDict):
    """Sidecar written beside exported training data."""
    kind: str
    examples: int
    trainer_defaults: Dict[str, Any]
    sources: Dict[str, Any]


# ============================================================================
# External corpora
# ============================================================================

class SgdSlotSpan(TypedDict):
    """Annotated slot span inside an SGD utterance."""
    slot: str
    start: int
    exclusive_end: int


class SgdFrameState(TypedDict, total=False):
    active_intent: str
    requested_slots: List[str]
    slot_values: Dict[str, List[str]]


class SgdFrame(TypedDict, total=False):
    service: str
    slots: List[SgdSlotSpan]
    state: SgdFrameState
    actions: List[Dict[str, Any]]


class SgdTurnRecord(TypedDict):
    speaker: Literal["USER", "SYSTEM"]
    utterance: str
    frames: List[SgdFrame]


class SgdDialogueRecord(TypedDict):
    dialogue_id: str
    services: List[str]
    turns: List[SgdTurnRecord]


# ============================================================================
# Run outputs
# ============================================================================

class RunManifest(TypedDict):
    """Written beside a generated corpus."""
    version: str
    master_seed: int
    n_dialogues: int
    config: Dict[str, Any]
    report: Dict[str, Any]
