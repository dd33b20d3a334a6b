"""
Persona-conditioned self-chat.

Two agents share one chat backend and alternate, the sales agent opening.
After each USER turn, once the minimum length is reached, a stop hook
decides whether chit-chat is over (the pipeline plugs intent detection in
here).
"""

import inspect
import logging
from typing import Awaitable, Callable, List, Optional, Sequence, Union

from src.backends.base import ChatBackend
from src.exceptions import GenerationError, PartialResultError, PreconditionError
from src.models.constants import META_BACKEND
from src.models.enums import Phase, Speaker
from src.models.types import Persona, SelfChatConfig, Turn
from src.utils.text import normalize_whitespace

logger = logging.getLogger(__name__)

StopHook = Callable[[Sequence[Turn]], Union[bool, Awaitable[bool]]]


def never_stop(turns: Sequence[Turn]) -> bool:
    return False


async def _evaluate_hook(stop_hook: StopHook, turns: Sequence[Turn]) -> bool:
    result = stop_hook(turns)
    if inspect.isawaitable(result):
        result = await result
    return bool(result)


async def run_selfchat(
    user_persona: Persona,
    sales_persona: Persona,
    config: SelfChatConfig,
    backend: ChatBackend,
    stop_hook: StopHook = never_stop,
    seed: Optional[int] = None,
) -> List[Turn]:
    """
    Run one self-chat.

    Args:
        user_persona: Persona with role USER
        sales_persona: Persona with role SALES
        config: Length bounds and decoding
        backend: Chat backend used for both agents
        stop_hook: Called with the turns so far after eligible USER turns; may be async
        seed: Overrides the decoding seed for this dialogue

    Returns:
        Alternating CHITCHAT turns, SALES first

    Raises:
        PreconditionError: Persona roles are not USER and SALES
        PartialResultError: A backend call failed; ``partial`` holds the turns so far
    """
    if user_persona.role != Speaker.USER or sales_persona.role != Speaker.SALES:
        raise PreconditionError("user and sales personas must have roles USER and SALES", invalid_fields=["persona"])

    decoding = config.decoding if seed is None else config.decoding.with_seed(seed)
    personas = {Speaker.USER: user_persona, Speaker.SALES: sales_persona}
    turns: List[Turn] = []
    speaker = Speaker.SALES

    while len(turns) < config.max_chitchat_turns:
        try:
            text = await backend.chat_reply(tuple(turns), personas[speaker].sentences, decoding)
            if not normalize_whitespace(text):
                raise GenerationError.empty_output(backend.name)
        except Exception as e:
            raise PartialResultError(f"Self-chat failed at turn {len(turns)}: {e}", list(turns), e) from e

        turns.append(Turn(speaker=speaker, text=text, phase=Phase.CHITCHAT, meta={META_BACKEND: backend.name}))

        if speaker == Speaker.USER and len(turns) >= config.min_chitchat_turns:
            if await _evaluate_hook(stop_hook, tuple(turns)):
                logger.debug(f"Self-chat stopped by hook after {len(turns)} turns")
                break
        speaker = speaker.other

    return turns
