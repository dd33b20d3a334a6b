"""
Backend contracts.

Every neural model the pipeline uses is reached through one of four async
contracts. Implementations either return a well-formed value or raise a
``SalesBotError`` subclass; they never return partial results and must
tolerate concurrent calls.
"""

from typing import List, Protocol, Sequence, runtime_checkable

from src.exceptions import PreconditionError
from src.models.types import DecodingConfig, QAAnswer, Turn
from src.utils.validation import _require_non_empty


@runtime_checkable
class ChatBackend(Protocol):
    name: str

    async def chat_reply(self, context: Sequence[Turn], persona: Sequence[str], config: DecodingConfig) -> str:
        """Next utterance after ``context`` spoken under ``persona``."""
        ...


@runtime_checkable
class QABackend(Protocol):
    name: str

    async def answer_question(self, context_text: str, question: str) -> QAAnswer:
        """Yes/no answer to ``question`` about ``context_text``."""
        ...


@runtime_checkable
class ParaphraseBackend(Protocol):
    name: str

    async def paraphrase(self, question: str, n: int) -> List[str]:
        """Exactly ``n`` distinct rewrites, none equal to ``question``."""
        ...


@runtime_checkable
class Seq2SeqBackend(Protocol):
    name: str

    async def seq2seq_generate(self, source: str, config: DecodingConfig) -> str:
        """One generated target for ``source``."""
        ...


def check_chat_args(context: Sequence[Turn], persona: Sequence[str]) -> None:
    if not context and not any(sentence.strip() for sentence in persona):
        raise PreconditionError("context or persona must be non-empty", invalid_fields=["context", "persona"])


def check_qa_args(context_text: str, question: str) -> None:
    _require_non_empty(context_text=context_text, question=question)


def check_paraphrase_args(question: str, n: int) -> None:
    _require_non_empty(question=question)
    if n < 1:
        raise PreconditionError(f"n must be positive, got {n}", invalid_fields=["n"])


def check_seq2seq_args(source: str) -> None:
    _require_non_empty(source=source)
