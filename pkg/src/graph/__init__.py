"""
Per-dialogue generation workflow.

This module provides the LangGraph workflow builder, its stages and the
dialogue state that flows through them.
"""

from .builder import build_dialogue_graph, stage_routing, STAGE_ORDER
from .nodes import DialogueStages, GenerationContext, choose_provenance
from .state import DialogueState, create_initial_state

__all__ = [
    "build_dialogue_graph",
    "stage_routing",
    "STAGE_ORDER",
    "DialogueStages",
    "GenerationContext",
    "choose_provenance",
    "DialogueState",
    "create_initial_state",
]
