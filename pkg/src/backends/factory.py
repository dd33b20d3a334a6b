"""Backend construction from descriptors."""

import logging
from typing import Any, Dict, Optional

from src.api.client import InferenceClient
from src.backends.llm import AnthropicChat, AnthropicParaphrase
from src.backends.mock import (
    DEFAULT_TOD_SALES_BANK,
    DEFAULT_TOD_USER_BANK,
    MockChat,
    MockParaphrase,
    MockQA,
    MockSeq2Seq,
    load_mock_script,
)
from src.backends.remote import RemoteChat, RemoteParaphrase, RemoteQA, RemoteSeq2Seq
from src.config.pipeline_config import PipelineConfig
from src.exceptions import ConfigError
from src.models.enums import BackendKind, BackendProvider, BackendRole
from src.models.types import BackendDescriptor

logger = logging.getLogger(__name__)


def _build_mock(descriptor: BackendDescriptor, role: Optional[BackendRole]):
    script = load_mock_script(descriptor.mock_script)
    if descriptor.kind == BackendKind.CHAT:
        # simulator roles default to task-oriented banks
        if role in (BackendRole.TOD_USER, BackendRole.TOD_SALES):
            return MockChat.from_script(descriptor.name, script, DEFAULT_TOD_USER_BANK, DEFAULT_TOD_SALES_BANK)
        return MockChat.from_script(descriptor.name, script)
    if descriptor.kind == BackendKind.QA:
        return MockQA.from_script(descriptor.name, script)
    if descriptor.kind == BackendKind.PARAPHRASE:
        return MockParaphrase.from_script(descriptor.name, script)
    return MockSeq2Seq.from_script(descriptor.name, script)


def _build_remote(descriptor: BackendDescriptor, client: InferenceClient):
    if descriptor.kind == BackendKind.CHAT:
        return RemoteChat(descriptor.name, client, descriptor.endpoint)
    if descriptor.kind == BackendKind.QA:
        return RemoteQA(descriptor.name, client, descriptor.endpoint)
    if descriptor.kind == BackendKind.PARAPHRASE:
        return RemoteParaphrase(descriptor.name, client, descriptor.decoding, descriptor.endpoint)
    return RemoteSeq2Seq(descriptor.name, client, descriptor.endpoint)


def build_backend(
    descriptor: BackendDescriptor,
    role: Optional[BackendRole] = None,
    client: Optional[InferenceClient] = None,
    llm: Optional[Any] = None,
):
    """
    Build the backend a descriptor asks for.

    Args:
        descriptor: Kind, provider and provider-specific settings
        role: Pipeline role, used to pick role-appropriate mock defaults
        client: Shared inference client for remote backends
        llm: Chat model override for anthropic backends

    Raises:
        ConfigError: Unreadable mock script or unsupported provider/kind pair
    """
    logger.debug(f"Building {descriptor.provider.value} {descriptor.kind.value} backend '{descriptor.name}'")
    if descriptor.provider == BackendProvider.MOCK:
        return _build_mock(descriptor, role)
    if descriptor.provider == BackendProvider.REMOTE:
        return _build_remote(descriptor, client or InferenceClient())
    if descriptor.kind == BackendKind.CHAT:
        return AnthropicChat(descriptor.name, llm)
    if descriptor.kind == BackendKind.PARAPHRASE:
        return AnthropicParaphrase(descriptor.name, llm)
    raise ConfigError(f"Provider {descriptor.provider.value} cannot serve {descriptor.kind.value}")


def build_backends(
    pipeline_config: PipelineConfig,
    client: Optional[InferenceClient] = None,
    llm: Optional[Any] = None,
) -> Dict[BackendRole, Any]:
    """One backend per pipeline role; remote roles share one client."""
    if client is None and BackendProvider.REMOTE in pipeline_config.backends.providers():
        client = InferenceClient()
    return {
        role: build_backend(pipeline_config.backends.for_role(role), role, client, llm)
        for role in BackendRole
    }
