"""
Backends served by the remote inference server.

Each adapter checks the call contract, posts through the shared
``InferenceClient`` and validates the shape of the ``output`` field.
"""

import logging
from typing import List, Optional, Sequence

from src.api.client import InferenceClient
from src.api.endpoints import inference
from src.backends.base import check_chat_args, check_paraphrase_args, check_qa_args, check_seq2seq_args
from src.exceptions import GenerationError
from src.models.enums import QALabel
from src.models.types import DecodingConfig, QAAnswer, Turn
from src.utils.text import normalize_for_compare, normalize_whitespace

logger = logging.getLogger(__name__)


class _RemoteBackend:
    def __init__(self, name: str, client: InferenceClient, endpoint: Optional[str] = None):
        self.name = name
        self.client = client
        self.endpoint = endpoint

    def _single_text(self, response) -> str:
        texts = inference.output_texts(response)
        text = normalize_whitespace(texts[0]) if texts else ""
        if not text:
            raise GenerationError.empty_output(self.name)
        return text


class RemoteChat(_RemoteBackend):
    async def chat_reply(self, context: Sequence[Turn], persona: Sequence[str], config: DecodingConfig) -> str:
        check_chat_args(context, persona)
        response = await inference.generate_chat(self.client, context, persona, config, self.endpoint)
        return self._single_text(response)


class RemoteQA(_RemoteBackend):
    async def answer_question(self, context_text: str, question: str) -> QAAnswer:
        check_qa_args(context_text, question)
        response = await inference.answer_question(self.client, context_text, question, self.endpoint)
        output = response.get("output")
        if not isinstance(output, dict) or "label" not in output or "confidence" not in output:
            raise GenerationError(f"Backend '{self.name}' returned a malformed QA output: {output!r}", backend=self.name)
        try:
            return QAAnswer(label=QALabel(str(output["label"]).lower()), confidence=float(output["confidence"]))
        except ValueError as e:
            raise GenerationError(f"Backend '{self.name}' returned an invalid QA output: {e}", backend=self.name) from e


class RemoteParaphrase(_RemoteBackend):
    def __init__(self, name: str, client: InferenceClient, decoding: DecodingConfig, endpoint: Optional[str] = None):
        super().__init__(name, client, endpoint)
        self.decoding = decoding

    async def paraphrase(self, question: str, n: int) -> List[str]:
        check_paraphrase_args(question, n)
        response = await inference.paraphrase(self.client, question, n, self.decoding, self.endpoint)
        return distinct_rewrites(self.name, question, inference.output_texts(response), n)


class RemoteSeq2Seq(_RemoteBackend):
    async def seq2seq_generate(self, source: str, config: DecodingConfig) -> str:
        check_seq2seq_args(source)
        response = await inference.seq2seq_generate(self.client, source, config, self.endpoint)
        return self._single_text(response)


def distinct_rewrites(backend: str, question: str, candidates: Sequence[str], n: int) -> List[str]:
    """First ``n`` non-empty rewrites distinct from each other and from ``question``."""
    seen = {normalize_for_compare(question)}
    results: List[str] = []
    for candidate in candidates:
        text = normalize_whitespace(candidate)
        key = normalize_for_compare(text)
        if not text or key in seen:
            continue
        seen.add(key)
        results.append(text)
        if len(results) == n:
            return results
    raise GenerationError(f"Backend '{backend}' returned {len(results)} usable paraphrase(s), expected {n}", backend=backend)
