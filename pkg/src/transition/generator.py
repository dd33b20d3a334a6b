"""
Generative transitions and transition training data.

Candidates are sampled from the seq2seq backend with one derived sub-seed per
candidate, so a candidate list is reproducible from the decoding seed.
"""

import asyncio
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.backends.base import Seq2SeqBackend
from src.exceptions import PreconditionError
from src.models.constants import DEFAULT_TRANSITION_CANDIDATES, TRANSITION_TOP_K, TRANSITION_TOP_P, TRANSITION_TRAINER_DEFAULTS
from src.models.enums import TransitionDataMix
from src.models.record_types import TransitionRecord
from src.models.types import DecodingConfig, Dialogue, TransitionTriple
from src.transition.encoding import encode_triple_source
from src.utils.files import write_ndjson, write_training_manifest
from src.utils.seeding import derive_seed

logger = logging.getLogger(__name__)


async def generate_transitions(
    past: str,
    future: str,
    seq2seq_backend: Seq2SeqBackend,
    config: Optional[DecodingConfig] = None,
    n_candidates: int = DEFAULT_TRANSITION_CANDIDATES,
) -> List[str]:
    """
    Sample ``n_candidates`` transitions bridging ``past`` and ``future``.

    Candidate i is decoded with seed ``derive_seed(config.seed, i)``.
    Duplicates are kept and order follows i.
    """
    if n_candidates < 1:
        raise PreconditionError(f"n_candidates must be positive, got {n_candidates}", invalid_fields=["n_candidates"])
    config = config or DecodingConfig(top_k=TRANSITION_TOP_K, top_p=TRANSITION_TOP_P)
    source = encode_triple_source(past, future)
    candidates = await asyncio.gather(*(
        seq2seq_backend.seq2seq_generate(source, config.with_seed(derive_seed(config.seed, index)))
        for index in range(n_candidates)
    ))
    return list(candidates)


def select_transition(candidates: Sequence[str], best_index: int) -> str:
    if not 0 <= best_index < len(candidates):
        raise PreconditionError(
            f"best index {best_index} out of range for {len(candidates)} candidates",
            invalid_fields=["best_index"],
        )
    return candidates[best_index]


def apply_best_transition(dialogue: Dialogue, best_index: int) -> Dialogue:
    """Replace the transition turn's text with the chosen candidate."""
    split = dialogue.transition_index
    if split is None or not dialogue.transition_candidates:
        raise PreconditionError(f"Dialogue '{dialogue.id}' has no transition candidates", invalid_fields=["transition_candidates"])
    chosen = select_transition(dialogue.transition_candidates, best_index)
    turns = list(dialogue.turns)
    turns[split] = turns[split].model_copy(update={"text": chosen})
    return dialogue.model_copy(update={"turns": tuple(turns)})


def mix_triples(
    template_triples: Sequence[TransitionTriple],
    otters_triples: Sequence[TransitionTriple],
    mix: TransitionDataMix,
) -> List[TransitionTriple]:
    if mix == TransitionDataMix.TEMPLATE:
        return list(template_triples)
    if mix == TransitionDataMix.OTTERS:
        return list(otters_triples)
    return [*template_triples, *otters_triples]


def write_transition_data(path: str | Path, triples: Sequence[TransitionTriple], sources: Dict[str, Any]) -> int:
    """Write ``{"source", "target"}`` NDJSON plus a manifest with the transition trainer defaults."""
    count = write_ndjson(path, (
        TransitionRecord(source=encode_triple_source(triple.past, triple.future), target=triple.target)
        for triple in triples
    ))
    write_training_manifest(path, "transition", count, TRANSITION_TRAINER_DEFAULTS, sources)
    logger.info(f"Wrote {count} transition examples to {path}")
    return count
