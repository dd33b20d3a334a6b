"""
Run configuration for dialogue generation.

A run is described by a JSON file validated into ``PipelineConfig``. Absent
fields take defaults, unknown keys are rejected, and a small set of
environment variables override the file last so that a batch job can redirect
its inputs and output without editing the config.
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic import ValidationError as PydanticValidationError

from src.config.config import config as env_config
from src.exceptions import ConfigError
from src.models.constants import (
    DEFAULT_DETECTION_THRESHOLD,
    DEFAULT_PARAPHRASES_PER_INTENT,
    DEFAULT_TRANSITION_CANDIDATES,
    SIMULATOR_TOP_K,
    TRANSITION_TOP_K,
    TRANSITION_TOP_P,
)
from src.models.enums import BackendKind, BackendProvider, BackendRole, ContinuationMode
from src.models.types import BackendDescriptor, DecodingConfig, SelfChatConfig, TerminationPolicy

logger = logging.getLogger(__name__)

# Environment variable -> dotted config key
ENV_OVERRIDES: Dict[str, str] = {
    "SALESBOT_OUTPUT_PATH": "io.output_path",
    "SALESBOT_PERSONA_FILE": "io.persona_file",
    "SALESBOT_SGD_PATH": "io.sgd_path",
    "SALESBOT_OTTERS_PATH": "io.otters_path",
    "SALESBOT_MASTER_SEED": "master_seed",
    "SALESBOT_MODE": "continuation.mode",
}


def transition_decoding() -> DecodingConfig:
    return DecodingConfig(top_k=TRANSITION_TOP_K, top_p=TRANSITION_TOP_P)


def simulator_decoding() -> DecodingConfig:
    return DecodingConfig(top_k=SIMULATOR_TOP_K)


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid")


class BackendsConfig(_Strict):
    """One backend per pipeline role."""
    chitchat: BackendDescriptor = Field(
        default_factory=lambda: BackendDescriptor(kind=BackendKind.CHAT, name="mock-chitchat")
    )
    qa: BackendDescriptor = Field(
        default_factory=lambda: BackendDescriptor(kind=BackendKind.QA, name="mock-qa")
    )
    paraphrase: BackendDescriptor = Field(
        default_factory=lambda: BackendDescriptor(kind=BackendKind.PARAPHRASE, name="mock-paraphrase")
    )
    transition: BackendDescriptor = Field(
        default_factory=lambda: BackendDescriptor(
            kind=BackendKind.SEQ2SEQ, name="mock-transition", decoding=transition_decoding()
        )
    )
    tod_user: BackendDescriptor = Field(
        default_factory=lambda: BackendDescriptor(
            kind=BackendKind.CHAT, name="mock-tod-user", decoding=simulator_decoding()
        )
    )
    tod_sales: BackendDescriptor = Field(
        default_factory=lambda: BackendDescriptor(
            kind=BackendKind.CHAT, name="mock-tod-sales", decoding=simulator_decoding()
        )
    )

    def for_role(self, role: BackendRole) -> BackendDescriptor:
        return getattr(self, role.value)

    def providers(self) -> set:
        return {self.for_role(role).provider for role in BackendRole}


class DetectionConfig(_Strict):
    threshold: float = Field(default=DEFAULT_DETECTION_THRESHOLD, ge=0.0, le=1.0)
    # None means the whole chit-chat history
    window: Optional[int] = Field(default=None, ge=1)
    n_paraphrases: int = Field(default=DEFAULT_PARAPHRASES_PER_INTENT, ge=0)


class TransitionConfig(_Strict):
    n_candidates: int = Field(default=DEFAULT_TRANSITION_CANDIDATES, ge=1)
    decoding: DecodingConfig = Field(default_factory=transition_decoding)
    generative: bool = True

    @model_validator(mode="after")
    def _check_candidates(self) -> "TransitionConfig":
        # dialogues carry either no candidates or exactly five
        if self.generative and self.n_candidates != DEFAULT_TRANSITION_CANDIDATES:
            raise ValueError(f"n_candidates must be {DEFAULT_TRANSITION_CANDIDATES} when generative transitions are on")
        return self


class ContinuationConfig(_Strict):
    mode: ContinuationMode = ContinuationMode.MERGE_SGD
    p_sim: float = Field(default=0.49, ge=0.0, le=1.0)
    policy: TerminationPolicy = Field(default_factory=TerminationPolicy)
    decoding: DecodingConfig = Field(default_factory=simulator_decoding)


class IOConfig(_Strict):
    persona_file: Optional[str] = None
    sgd_path: Optional[str] = None
    otters_path: Optional[str] = None
    output_path: str = "output/dialogues.jsonl"


class PipelineConfig(_Strict):
    """Everything a generation run needs."""
    backends: BackendsConfig = Field(default_factory=BackendsConfig)
    selfchat: SelfChatConfig = Field(default_factory=SelfChatConfig)
    detection: DetectionConfig = Field(default_factory=DetectionConfig)
    transition: TransitionConfig = Field(default_factory=TransitionConfig)
    continuation: ContinuationConfig = Field(default_factory=ContinuationConfig)
    io: IOConfig = Field(default_factory=IOConfig)
    master_seed: int = 0
    workers: int = Field(default_factory=lambda: env_config.SALESBOT_WORKERS, ge=1)

    def echo(self) -> Dict[str, Any]:
        """JSON-ready copy for the run manifest."""
        return self.model_dump(mode="json")

    def check_paths(self, require_sgd: bool = True) -> None:
        """Check that every referenced input path exists (called at run start)."""
        needs_sgd = require_sgd and self.continuation.mode in (ContinuationMode.MERGE_SGD, ContinuationMode.MIXED)
        if needs_sgd and self.continuation.p_sim < 1.0 and not self.io.sgd_path:
            raise ConfigError("io.sgd_path is required for Merge SGD continuation", key_path="io.sgd_path")

        for key in ("persona_file", "sgd_path", "otters_path"):
            value = getattr(self.io, key)
            if value and not Path(value).exists():
                raise ConfigError(f"io.{key}: path does not exist: {value}", key_path=f"io.{key}")

        for role in BackendRole:
            script = self.backends.for_role(role).mock_script
            if script and not Path(script).exists():
                raise ConfigError(
                    f"backends.{role.value}.mock_script: path does not exist: {script}",
                    key_path=f"backends.{role.value}.mock_script",
                )


def _set_dotted(data: Dict[str, Any], dotted: str, value: Any) -> None:
    node = data
    *parents, leaf = dotted.split(".")
    for part in parents:
        child = node.get(part)
        if not isinstance(child, dict):
            child = {}
            node[part] = child
        node = child
    node[leaf] = value


def _apply_env_overrides(data: Dict[str, Any], environ: Optional[Dict[str, str]] = None) -> Dict[str, Any]:
    environ = os.environ if environ is None else environ
    for variable, dotted in ENV_OVERRIDES.items():
        if variable in environ and environ[variable] != "":
            logger.info(f"Config override from {variable}: {dotted}")
            _set_dotted(data, dotted, environ[variable])
    return data


def _format_pydantic_errors(error: PydanticValidationError) -> ConfigError:
    field_errors: Dict[str, str] = {}
    for item in error.errors():
        key_path = ".".join(str(part) for part in item["loc"]) or "<root>"
        if item["type"] == "extra_forbidden":
            field_errors[key_path] = "unknown key"
        else:
            field_errors[key_path] = item["msg"]
    first_key = next(iter(field_errors))
    message = "; ".join(f"{key}: {reason}" for key, reason in field_errors.items())
    return ConfigError(
        f"Invalid config: {message}",
        key_path=first_key,
        field_errors=field_errors,
        invalid_fields=list(field_errors),
    )


def parse_config(data: Dict[str, Any], environ: Optional[Dict[str, str]] = None) -> PipelineConfig:
    """Validate a config mapping after applying environment overrides."""
    if not isinstance(data, dict):
        raise ConfigError("Config root must be a JSON object", key_path="<root>")
    data = _apply_env_overrides(json.loads(json.dumps(data)), environ)
    try:
        return PipelineConfig.model_validate(data)
    except PydanticValidationError as e:
        raise _format_pydantic_errors(e) from e


def load_config(path: str | Path, environ: Optional[Dict[str, str]] = None) -> PipelineConfig:
    """
    Load a run config from a JSON file.

    Args:
        path: Config file; an empty file yields the full default config
        environ: Environment to read overrides from (defaults to os.environ)

    Returns:
        Validated PipelineConfig

    Raises:
        ConfigError: Missing file, malformed JSON, unknown key or type mismatch
    """
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"Config file not found: {path}")

    text = path.read_text(encoding="utf-8").strip()
    try:
        data = json.loads(text) if text else {}
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config file {path} is not valid JSON: {e}") from e

    loaded = parse_config(data, environ)
    logger.info(f"Loaded config from {path} (mode={loaded.continuation.mode.value}, seed={loaded.master_seed})")
    return loaded


def uses_provider(pipeline_config: PipelineConfig, provider: BackendProvider) -> bool:
    return provider in pipeline_config.backends.providers()
