"""
Task wrappers for POST /generate.

Each function builds the task-specific ``inputs`` object, posts it through an
``InferenceClient`` and returns the raw ``output`` field. Shape checks on the
output belong to the backend adapters in ``src.backends.remote``.
"""

from typing import Any, Dict, List, Optional, Sequence

from src.api.client import InferenceClient
from src.models.constants import TASK_CHAT, TASK_PARAPHRASE, TASK_QA, TASK_SEQ2SEQ
from src.models.record_types import DecodingPayload, InferenceRequest, InferenceResponse
from src.models.types import DecodingConfig, Turn


def _decoding_payload(decoding: DecodingConfig) -> DecodingPayload:
    return DecodingPayload(
        top_k=decoding.top_k,
        top_p=decoding.top_p,
        max_new_tokens=decoding.max_new_tokens,
        seed=decoding.seed,
    )


async def _generate(
    client: InferenceClient,
    task: str,
    inputs: Dict[str, Any],
    decoding: Optional[DecodingConfig] = None,
    endpoint: Optional[str] = None,
) -> InferenceResponse:
    body = InferenceRequest(task=task, inputs=inputs)
    if decoding is not None:
        body["config"] = _decoding_payload(decoding)
    if endpoint:
        return await client.post(dict(body), endpoint=endpoint)
    return await client.post(dict(body))


async def generate_chat(
    client: InferenceClient,
    context: Sequence[Turn],
    persona: Sequence[str],
    decoding: DecodingConfig,
    endpoint: Optional[str] = None,
) -> InferenceResponse:
    """POST /generate task=chat: next utterance given the history and persona."""
    inputs = {
        "context": [{"speaker": turn.speaker.value, "text": turn.text} for turn in context],
        "persona": list(persona),
    }
    return await _generate(client, TASK_CHAT, inputs, decoding, endpoint)


async def answer_question(
    client: InferenceClient,
    context_text: str,
    question: str,
    endpoint: Optional[str] = None,
) -> InferenceResponse:
    """POST /generate task=qa: yes/no answer with confidence."""
    return await _generate(client, TASK_QA, {"context": context_text, "question": question}, None, endpoint)


async def paraphrase(
    client: InferenceClient,
    question: str,
    n: int,
    decoding: DecodingConfig,
    endpoint: Optional[str] = None,
) -> InferenceResponse:
    """POST /generate task=paraphrase: n rewrites of the question."""
    return await _generate(client, TASK_PARAPHRASE, {"text": question, "n": n}, decoding, endpoint)


async def seq2seq_generate(
    client: InferenceClient,
    source: str,
    decoding: DecodingConfig,
    endpoint: Optional[str] = None,
) -> InferenceResponse:
    """POST /generate task=seq2seq: one sampled target for the source."""
    return await _generate(client, TASK_SEQ2SEQ, {"source": source}, decoding, endpoint)


def output_texts(response: InferenceResponse) -> List[str]:
    output = response.get("output")
    if isinstance(output, str):
        return [output]
    if isinstance(output, list):
        return [item for item in output if isinstance(item, str)]
    return []
