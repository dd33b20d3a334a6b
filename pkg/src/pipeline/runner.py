"""
Batch dialogue generation.

Dialogue i is generated from seed ``derive_seed(master_seed, i)`` by the
per-dialogue graph. Attempts run concurrently (bounded by ``workers``) and
are written in index order, so the corpus bytes depend only on the config
and the number of dialogues.
"""

import asyncio
import logging
from collections import Counter
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from pydantic import BaseModel, Field
from tqdm.asyncio import tqdm_asyncio

from src.api.client import InferenceClient
from src.backends.factory import build_backends
from src.config.config import config as env_config
from src.config.pipeline_config import PipelineConfig, uses_provider
from src.continuation.sgd_index import index_sgd
from src.dialogue.serialization import write_corpus
from src.dialogue.sgd import read_sgd_dialogues, read_sgd_ontology
from src.exceptions import ConfigError, PreconditionError
from src.graph import GenerationContext, build_dialogue_graph, create_initial_state
from src.intent.catalog import augment_with_paraphrases, build_question_catalog
from src.models.enums import BackendProvider, BackendRole, ContinuationMode, IntentName
from src.models.types import Dialogue, IntentLabel, IntentQuestionSet, SgdIndex
from src.pipeline.manifest import write_run_manifest
from src.selfchat.personas import DEFAULT_PERSONA_POOL, load_personas
from src.utils.seeding import derive_seed

logger = logging.getLogger(__name__)


class GenerationReport(BaseModel):
    """Outcome of a batch: every attempted dialogue is either written or discarded."""
    n_dialogues: int = 0
    written: int = 0
    discarded: Dict[str, int] = Field(default_factory=dict)
    per_intent: Dict[str, int] = Field(default_factory=dict)
    per_provenance: Dict[str, int] = Field(default_factory=dict)

    @property
    def discarded_total(self) -> int:
        return sum(self.discarded.values())


def _check_env(pipeline_config: PipelineConfig) -> None:
    try:
        env_config.validate(
            needs_remote=uses_provider(pipeline_config, BackendProvider.REMOTE),
            needs_anthropic=uses_provider(pipeline_config, BackendProvider.ANTHROPIC),
        )
    except ValueError as e:
        raise ConfigError(str(e)) from e


def _needs_sgd(pipeline_config: PipelineConfig) -> bool:
    continuation = pipeline_config.continuation
    if continuation.mode == ContinuationMode.MIXED:
        return continuation.p_sim < 1.0
    return continuation.mode == ContinuationMode.MERGE_SGD


def load_inputs(pipeline_config: PipelineConfig) -> Tuple[SgdIndex, Dict[str, str]]:
    """SGD index and ontology descriptions, when the config names an SGD corpus."""
    sgd_path = pipeline_config.io.sgd_path
    if not sgd_path:
        return SgdIndex(), {}
    dialogues = read_sgd_dialogues(sgd_path) if _needs_sgd(pipeline_config) else []
    return index_sgd(dialogues), read_sgd_ontology(sgd_path)


async def build_catalog(
    pipeline_config: PipelineConfig,
    paraphrase_backend: Any,
    ontology: Optional[Mapping[str, str]] = None,
) -> List[IntentQuestionSet]:
    """The six intents (with ontology descriptions when known), paraphrase-augmented."""
    ontology = ontology or {}
    intents = [IntentLabel.from_name(name, ontology.get(name.value)) for name in IntentName]
    catalog = build_question_catalog(intents)
    return await augment_with_paraphrases(catalog, paraphrase_backend, pipeline_config.detection.n_paraphrases)


def summarize(states: Sequence[Mapping[str, Any]]) -> GenerationReport:
    discarded: Counter = Counter()
    per_intent: Counter = Counter()
    per_provenance: Counter = Counter()
    written = 0
    for state in states:
        dialogue: Optional[Dialogue] = state.get("dialogue")
        if state.get("discard") or dialogue is None:
            reason = state.get("discard")
            discarded[reason.value if reason else "UNKNOWN"] += 1
            continue
        written += 1
        per_intent[dialogue.intent.name] += 1
        per_provenance[dialogue.provenance.value] += 1
    return GenerationReport(
        n_dialogues=len(states),
        written=written,
        discarded=dict(sorted(discarded.items())),
        per_intent=dict(sorted(per_intent.items())),
        per_provenance=dict(sorted(per_provenance.items())),
    )


async def generate_dialogues(
    context: GenerationContext,
    n_dialogues: int,
    progress: bool = False,
) -> List[Mapping[str, Any]]:
    """Final graph state of every attempt, in index order."""
    app = build_dialogue_graph(context)
    semaphore = asyncio.Semaphore(context.config.workers)
    master_seed = context.config.master_seed

    async def attempt(index: int) -> Mapping[str, Any]:
        async with semaphore:
            return await app.ainvoke(create_initial_state(index, derive_seed(master_seed, index)))

    tasks = [attempt(index) for index in range(n_dialogues)]
    return list(await tqdm_asyncio.gather(*tasks, disable=not progress, desc="dialogues"))


async def run_pipeline(
    pipeline_config: PipelineConfig,
    n_dialogues: int,
    backends: Optional[Mapping[BackendRole, Any]] = None,
    sgd_index: Optional[SgdIndex] = None,
    persona_pool: Optional[Sequence[Tuple[str, ...]]] = None,
    output_path: Optional[str | Path] = None,
    progress: bool = False,
) -> GenerationReport:
    """
    Generate, validate and write ``n_dialogues`` dialogue attempts.

    Args:
        pipeline_config: Run configuration
        n_dialogues: Number of attempts
        backends: Backends per role (built from the config when omitted)
        sgd_index: Merge SGD index (read from io.sgd_path when omitted)
        persona_pool: Personas (read from io.persona_file, or the built-in pool)
        output_path: Corpus path (defaults to io.output_path)
        progress: Show a progress bar

    Returns:
        GenerationReport with written + sum(discarded) == n_dialogues

    Raises:
        PreconditionError: n_dialogues is negative
        ConfigError: Missing inputs or credentials
        OSError: The corpus or manifest cannot be written
    """
    if n_dialogues < 0:
        raise PreconditionError(f"n_dialogues must be >= 0, got {n_dialogues}", invalid_fields=["n_dialogues"])

    pipeline_config.check_paths(require_sgd=sgd_index is None)
    output_path = Path(output_path or pipeline_config.io.output_path)

    client: Optional[InferenceClient] = None
    if backends is None:
        _check_env(pipeline_config)
        if uses_provider(pipeline_config, BackendProvider.REMOTE):
            client = InferenceClient()
        backends = build_backends(pipeline_config, client=client)

    try:
        ontology: Dict[str, str] = {}
        if sgd_index is None:
            sgd_index, ontology = load_inputs(pipeline_config)
        elif pipeline_config.io.sgd_path:
            ontology = read_sgd_ontology(pipeline_config.io.sgd_path)

        if persona_pool is None:
            persona_file = pipeline_config.io.persona_file
            persona_pool = load_personas(persona_file) if persona_file else DEFAULT_PERSONA_POOL

        catalog = await build_catalog(pipeline_config, backends[BackendRole.PARAPHRASE], ontology)
        context = GenerationContext(
            config=pipeline_config,
            backends=backends,
            catalog=catalog,
            sgd_index=sgd_index,
            persona_pool=persona_pool,
        )

        logger.info(f"Generating {n_dialogues} dialogues (mode={pipeline_config.continuation.mode.value}, "
                    f"seed={pipeline_config.master_seed}, workers={pipeline_config.workers})")
        states = await generate_dialogues(context, n_dialogues, progress)
    finally:
        if client is not None:
            await client.close()

    report = summarize(states)
    write_corpus(output_path, (state["dialogue"] for state in states if state.get("dialogue") and not state.get("discard")))
    write_run_manifest(output_path, pipeline_config, n_dialogues, report.model_dump(mode="json"))
    logger.info(f"Wrote {report.written} dialogues to {output_path}; discarded {report.discarded or 'none'}")
    return report
