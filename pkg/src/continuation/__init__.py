"""
Task-oriented continuation after the transition turn.

- sgd_index.py: SGD dialogues grouped by intent
- merge.py: Merge SGD splicing
- termination.py: simulator stop conditions
- simulator.py: dual-simulator self-play
"""

from .merge import merge_continuation
from .sgd_index import index_sgd, load_sgd_index, slot_tokens_well_formed
from .simulator import provisional_user_turn, simulate_continuation
from .termination import should_terminate

__all__ = [
    "index_sgd",
    "load_sgd_index",
    "slot_tokens_well_formed",
    "merge_continuation",
    "should_terminate",
    "simulate_continuation",
    "provisional_user_turn",
]
