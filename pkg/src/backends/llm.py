"""
Chat and paraphrase backends hosted on Anthropic models via LangChain.

The ``ChatAnthropic`` client is built from the process config unless one is
injected, which is how tests substitute a fake.
"""

import logging
from typing import Any, List, Optional, Sequence

from langchain_anthropic import ChatAnthropic
from langchain_core.messages import HumanMessage, SystemMessage
from pydantic import SecretStr

from src.backends.base import check_chat_args, check_paraphrase_args
from src.backends.remote import distinct_rewrites
from src.config.config import config
from src.exceptions import BackendError, GenerationError
from src.models.types import DecodingConfig, Turn
from src.utils.text import normalize_whitespace

logger = logging.getLogger(__name__)


def build_llm(temperature: float = 0.9) -> ChatAnthropic:
    return ChatAnthropic(
        api_key=SecretStr(config.ANTHROPIC_API_KEY),
        timeout=config.ANTHROPIC_API_TIMEOUT,
        model_name=config.ANTHROPIC_MODEL_NAME,
        temperature=temperature,
        stop=None
    )


def _transcript(context: Sequence[Turn]) -> str:
    return "\n".join(f"{turn.speaker.value}: {turn.text}" for turn in context)


def _content_text(message: Any) -> str:
    content = getattr(message, "content", message)
    if isinstance(content, list):
        content = "".join(part.get("text", "") if isinstance(part, dict) else str(part) for part in content)
    return str(content)


class _LLMBackend:
    def __init__(self, name: str, llm: Optional[Any] = None):
        self.name = name
        self._llm = llm

    @property
    def llm(self):
        if self._llm is None:
            self._llm = build_llm()
        return self._llm

    async def _invoke(self, system_prompt: str, human_prompt: str) -> str:
        try:
            response = await self.llm.ainvoke([
                SystemMessage(content=system_prompt),
                HumanMessage(content=human_prompt),
            ])
        except Exception as e:
            raise BackendError(f"LLM call failed: {str(e)}", backend=self.name) from e
        return _content_text(response)


class AnthropicChat(_LLMBackend):
    """Plays one side of a conversation under a persona."""

    async def chat_reply(self, context: Sequence[Turn], persona: Sequence[str], config: DecodingConfig) -> str:
        check_chat_args(context, persona)
        speaker = context[-1].speaker.other.value if context else "SALES"
        system_prompt = (
            f"You are {speaker} in a casual conversation. Stay in character.\n"
            f"Your persona:\n" + "\n".join(f"- {sentence}" for sentence in persona) +
            "\nReply with one short, natural utterance and nothing else."
        )
        human_prompt = f"Conversation so far:\n{_transcript(context) or '(you speak first)'}\n\n{speaker}:"
        text = normalize_whitespace(await self._invoke(system_prompt, human_prompt))
        if text.startswith(f"{speaker}:"):
            text = text[len(speaker) + 1:].strip()
        if not text:
            raise GenerationError.empty_output(self.name)
        logger.debug(f"{self.name} replied as {speaker}: {text}")
        return text


class AnthropicParaphrase(_LLMBackend):
    """Rewrites a yes/no question n ways, one per line."""

    async def paraphrase(self, question: str, n: int) -> List[str]:
        check_paraphrase_args(question, n)
        system_prompt = (
            "You paraphrase yes/no questions about a dialogue. Keep the meaning, change the wording. "
            "Answer with one paraphrase per line, no numbering."
        )
        raw = await self._invoke(system_prompt, f"Give {n + 2} paraphrases of: {question}")
        lines = [line.lstrip("-*0123456789. ").strip() for line in raw.splitlines()]
        return distinct_rewrites(self.name, question, lines, n)
