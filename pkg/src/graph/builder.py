"""
LangGraph builder for dialogue generation.

One compiled graph runs one dialogue attempt at a time and is shared by all
concurrent attempts of a batch.
"""

import logging

from langgraph.graph import END, StateGraph

from .nodes import DialogueStages, GenerationContext
from .state import DialogueState

logger = logging.getLogger(__name__)

STAGE_ORDER = ("selfchat", "transition", "continuation", "regeneration", "simulation", "validation")


def stage_routing(state: DialogueState) -> str:
    """Stop as soon as a stage has recorded a discard."""
    return "END" if state.get("discard") else "continue"


def build_dialogue_graph(context: GenerationContext):
    """
    Build the per-dialogue generation workflow.

    Every stage routes to END when it records a discard (including the
    NO_INTENT discard of self-chat), otherwise to the next stage.

    Returns:
        Compiled LangGraph workflow
    """
    stages = DialogueStages(context)
    workflow = StateGraph(DialogueState)

    for name in STAGE_ORDER:
        workflow.add_node(name, getattr(stages, name))

    workflow.set_entry_point(STAGE_ORDER[0])

    for current, following in zip(STAGE_ORDER, STAGE_ORDER[1:]):
        workflow.add_conditional_edges(
            current,
            stage_routing,
            {
                "continue": following,
                "END": END
            }
        )
    workflow.add_edge(STAGE_ORDER[-1], END)

    app = workflow.compile()
    logger.debug("Dialogue generation graph compiled")
    return app
