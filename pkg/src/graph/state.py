"""
Dialogue state for the generation graph.

One DialogueState flows through the stages of a single dialogue attempt.
Nodes return partial updates; a set ``discard`` ends the run early.
"""

from typing import List, Optional

from typing_extensions import TypedDict

from src.models.enums import DiscardReason, Provenance
from src.models.types import DetectionResult, Dialogue, Persona, Turn


class DialogueState(TypedDict):
    """State of one dialogue attempt."""

    # === Identity ===
    index: int
    seed: int
    dialogue_id: str

    # === Self-chat ===
    user_persona: Optional[Persona]
    sales_persona: Optional[Persona]
    chitchat: List[Turn]
    detection: Optional[DetectionResult]

    # === Transition ===
    transition: Optional[Turn]
    candidates: List[str]

    # === Continuation ===
    provenance: Optional[Provenance]
    tod: List[Turn]

    # === Result ===
    dialogue: Optional[Dialogue]
    discard: Optional[DiscardReason]
    error: Optional[str]


def create_initial_state(index: int, seed: int) -> DialogueState:
    return DialogueState(
        index=index,
        seed=seed,
        dialogue_id=f"dlg-{index:06d}",

        user_persona=None,
        sales_persona=None,
        chitchat=[],
        detection=None,

        transition=None,
        candidates=[],

        provenance=None,
        tod=[],

        dialogue=None,
        discard=None,
        error=None,
    )
