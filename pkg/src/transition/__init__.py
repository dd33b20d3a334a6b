"""
Transition turn generation.

- templates.py: "Do you want to ...?" template transitions
- encoding.py: past/future source encoding shared by training and generation
- triples.py: training triples from generated dialogues
- otters.py: OTTers topic-transition ingestion
- generator.py: multi-candidate generation and training data export
"""

from .encoding import decode_triple_source, encode_triple_source
from .generator import (
    apply_best_transition,
    generate_transitions,
    mix_triples,
    select_transition,
    write_transition_data,
)
from .otters import adapt_otters, read_otters
from .templates import template_transition
from .triples import build_training_triples, restore_template

__all__ = [
    "restore_template",
    "template_transition",
    "encode_triple_source",
    "decode_triple_source",
    "build_training_triples",
    "adapt_otters",
    "read_otters",
    "generate_transitions",
    "select_transition",
    "apply_best_transition",
    "mix_triples",
    "write_transition_data",
]
