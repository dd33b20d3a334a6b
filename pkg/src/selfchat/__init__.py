"""Open-domain self-chat between a user agent and a sales agent."""

from .engine import run_selfchat, never_stop
from .personas import load_personas, sample_persona_pair, DEFAULT_PERSONA_POOL

__all__ = ["run_selfchat", "never_stop", "load_personas", "sample_persona_pair", "DEFAULT_PERSONA_POOL"]
