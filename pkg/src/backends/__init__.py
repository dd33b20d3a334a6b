"""
Model backends.

- base.py: the chat / QA / paraphrase / seq2seq contracts
- mock.py: deterministic mocks for tests and offline runs
- remote.py: adapters for the remote inference server
- llm.py: Anthropic-hosted chat and paraphrase
- factory.py: construction from BackendDescriptor
"""

from .base import ChatBackend, QABackend, ParaphraseBackend, Seq2SeqBackend
from .factory import build_backend, build_backends
from .mock import MockChat, MockQA, MockParaphrase, MockSeq2Seq, QARule

__all__ = [
    "ChatBackend",
    "QABackend",
    "ParaphraseBackend",
    "Seq2SeqBackend",
    "build_backend",
    "build_backends",
    "MockChat",
    "MockQA",
    "MockParaphrase",
    "MockSeq2Seq",
    "QARule",
]
