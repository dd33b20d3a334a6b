"""Node decorators for the generation graph."""

import functools
import logging
from typing import Any, Callable, Dict

from src.exceptions import EmptyBucketError, SalesBotError
from src.models.enums import DiscardReason

logger = logging.getLogger(__name__)


def discard_on_error(reason: DiscardReason):
    """
    Turn a failing node into a discard instead of aborting the batch.

    The node's exception is logged and replaced by a state update carrying
    ``discard`` and ``error``. An empty Merge SGD bucket is always reported
    as EMPTY_BUCKET.

    Example:
        @discard_on_error(DiscardReason.SELFCHAT_FAILED)
        async def selfchat(self, state):
            ...
    """
    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        async def wrapper(*args, **kwargs) -> Dict[str, Any]:
            try:
                return await func(*args, **kwargs)
            except Exception as e:
                return _discard(e, func.__name__, reason, args[-1] if args else kwargs.get("state", {}))

        return wrapper

    return decorator


def _discard(e: Exception, func_name: str, reason: DiscardReason, state: Dict[str, Any]) -> Dict[str, Any]:
    if isinstance(e, EmptyBucketError):
        reason = DiscardReason.EMPTY_BUCKET
    error_type = "pipeline" if isinstance(e, SalesBotError) else "unexpected"
    logger.warning(f"Discarding {state.get('dialogue_id', '?')} in {func_name}: {reason.value} ({error_type}: {e})")
    return {"discard": reason, "error": f"{type(e).__name__}: {e}"}
