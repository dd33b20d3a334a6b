"""
Task-oriented continuation by two simulators talking to each other.

The user simulator speaks first after the transition; the two alternate
until a termination condition fires on the latest turn. The turn cap makes
this total whatever the backends produce.
"""

import logging
from typing import List, Optional, Sequence

from src.backends.base import ChatBackend
from src.continuation.termination import should_terminate
from src.exceptions import GenerationError, PartialResultError, PreconditionError
from src.models.constants import META_PROVISIONAL, META_TERMINATION, SIMULATOR_TOP_K
from src.models.enums import Phase, Speaker
from src.models.types import DecodingConfig, TerminationPolicy, Turn
from src.utils.text import normalize_whitespace

logger = logging.getLogger(__name__)


def _check_context(context: Sequence[Turn]) -> None:
    if not context or context[-1].phase != Phase.TRANSITION or context[-1].speaker != Speaker.SALES:
        raise PreconditionError("continuation context must end with the SALES transition turn", invalid_fields=["context"])


async def _reply(backend: ChatBackend, history: Sequence[Turn], decoding: DecodingConfig) -> str:
    text = await backend.chat_reply(tuple(history), (), decoding)
    if not normalize_whitespace(text):
        raise GenerationError.empty_output(backend.name)
    return text


async def provisional_user_turn(
    context: Sequence[Turn],
    user_backend: ChatBackend,
    decoding: Optional[DecodingConfig] = None,
) -> Turn:
    """First user TOD turn, generated before the transition is re-generated."""
    _check_context(context)
    decoding = decoding or DecodingConfig(top_k=SIMULATOR_TOP_K)
    try:
        text = await _reply(user_backend, context, decoding)
    except Exception as e:
        raise PartialResultError(f"Provisional user turn failed: {e}", [], e) from e
    return Turn(speaker=Speaker.USER, text=text, phase=Phase.TOD, meta={META_PROVISIONAL: True})


async def simulate_continuation(
    context: Sequence[Turn],
    user_backend: ChatBackend,
    sales_backend: ChatBackend,
    policy: Optional[TerminationPolicy] = None,
    decoding: Optional[DecodingConfig] = None,
    prefix: Sequence[Turn] = (),
) -> List[Turn]:
    """
    Let the simulators talk until the policy says stop.

    Args:
        context: Dialogue so far, ending with the SALES transition turn
        user_backend: User simulator
        sales_backend: Sales simulator
        policy: Termination policy
        decoding: Simulator decoding (top_k=120 by default)
        prefix: TOD turns already produced (the provisional user turn)

    Returns:
        TOD turns including the terminating one; its meta holds the termination reason

    Raises:
        PreconditionError: Context does not end with the transition turn
        PartialResultError: A backend call failed; ``partial`` holds the turns so far
    """
    _check_context(context)
    policy = policy or TerminationPolicy()
    decoding = decoding or DecodingConfig(top_k=SIMULATOR_TOP_K)
    backends = {Speaker.USER: user_backend, Speaker.SALES: sales_backend}

    tod: List[Turn] = list(prefix)
    reason = should_terminate(tod, policy)
    while reason is None:
        speaker = tod[-1].speaker.other if tod else Speaker.USER
        try:
            text = await _reply(backends[speaker], [*context, *tod], decoding)
        except Exception as e:
            raise PartialResultError(f"Simulation failed at TOD turn {len(tod)}: {e}", list(tod), e) from e
        tod.append(Turn(speaker=speaker, text=text, phase=Phase.TOD))
        reason = should_terminate(tod, policy)

    last = tod[-1]
    tod[-1] = last.model_copy(update={"meta": {**last.meta, META_TERMINATION: reason.model_dump(mode="json")}})
    logger.debug(f"Simulation ended after {len(tod)} turns: {reason.kind.value} ({reason.detail})")
    return tod
