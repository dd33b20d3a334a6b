"""
Inference server endpoint functions.

Thin wrappers that post one task to the server and return the raw response.
"""

from .inference import (
    generate_chat,
    answer_question,
    paraphrase,
    seq2seq_generate,
    output_texts,
)

__all__ = [
    "generate_chat",
    "answer_question",
    "paraphrase",
    "seq2seq_generate",
    "output_texts",
]
