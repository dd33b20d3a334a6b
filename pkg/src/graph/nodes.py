"""
Stages of one dialogue attempt.

selfchat -> transition -> continuation -> regeneration -> simulation -> validation

The transition node writes the template transition; continuation produces
the first task-oriented user turn (the whole Merge SGD splice, or one
provisional simulator turn); regeneration replaces the template with the
first of the generated candidates; simulation finishes simulator dialogues.
"""

import logging
import random
from dataclasses import dataclass
from typing import Any, Dict, Mapping, Sequence, Tuple

from src.config.pipeline_config import PipelineConfig
from src.continuation import merge_continuation, provisional_user_turn, simulate_continuation
from src.dialogue.validation import validate
from src.graph.decorators import discard_on_error
from src.graph.state import DialogueState
from src.intent.detector import DetectionHook
from src.models.constants import META_TEMPLATE, META_TRIGGER_QUESTION
from src.models.enums import BackendRole, ContinuationMode, DiscardReason, Phase, Provenance, Speaker
from src.models.types import Dialogue, IntentQuestionSet, SgdIndex, Turn
from src.selfchat import run_selfchat, sample_persona_pair
from src.transition import generate_transitions, template_transition
from src.utils.seeding import stable_hash
from src.utils.text import normalize_whitespace

logger = logging.getLogger(__name__)


@dataclass
class GenerationContext:
    """Everything the stages share across dialogues (read-only during a run)."""
    config: PipelineConfig
    backends: Mapping[BackendRole, Any]
    catalog: Sequence[IntentQuestionSet]
    sgd_index: SgdIndex
    persona_pool: Sequence[Tuple[str, ...]]


def choose_provenance(config: PipelineConfig, seed: int) -> Provenance:
    mode = config.continuation.mode
    if mode == ContinuationMode.MERGE_SGD:
        return Provenance.MERGE_SGD
    if mode == ContinuationMode.SIMULATION:
        return Provenance.SIMULATION
    coin = random.Random(stable_hash(seed, "provenance")).random()
    return Provenance.SIMULATION if coin < config.continuation.p_sim else Provenance.MERGE_SGD


class DialogueStages:
    """Graph nodes bound to a GenerationContext."""

    def __init__(self, context: GenerationContext):
        self.context = context
        self.config = context.config
        self.backends = context.backends

    @discard_on_error(DiscardReason.SELFCHAT_FAILED)
    async def selfchat(self, state: DialogueState) -> Dict[str, Any]:
        seed = state["seed"]
        user_persona, sales_persona = sample_persona_pair(self.context.persona_pool, seed)
        hook = DetectionHook(
            self.context.catalog,
            self.backends[BackendRole.QA],
            self.config.detection.threshold,
            self.config.detection.window,
        )
        turns = await run_selfchat(
            user_persona, sales_persona, self.config.selfchat, self.backends[BackendRole.CHITCHAT], hook, seed=seed
        )
        update: Dict[str, Any] = {
            "user_persona": user_persona,
            "sales_persona": sales_persona,
            "chitchat": turns,
            "detection": hook.result,
        }
        if hook.result is None:
            logger.info(f"{state['dialogue_id']}: no intent after {len(turns)} chit-chat turns")
            update["discard"] = DiscardReason.NO_INTENT
        return update

    @discard_on_error(DiscardReason.TRANSITION_FAILED)
    async def transition(self, state: DialogueState) -> Dict[str, Any]:
        detection = state["detection"]
        template = template_transition(detection.intent)
        turn = Turn(
            speaker=Speaker.SALES,
            text=template,
            phase=Phase.TRANSITION,
            meta={META_TRIGGER_QUESTION: detection.trigger_question, META_TEMPLATE: template},
        )
        return {"transition": turn, "provenance": choose_provenance(self.config, state["seed"])}

    @discard_on_error(DiscardReason.CONTINUATION_FAILED)
    async def continuation(self, state: DialogueState) -> Dict[str, Any]:
        seed = state["seed"]
        if state["provenance"] == Provenance.MERGE_SGD:
            tod = merge_continuation(state["detection"].intent, self.context.sgd_index, stable_hash(seed, "merge"))
            return {"tod": tod}
        context = [*state["chitchat"], state["transition"]]
        decoding = self.config.continuation.decoding.with_seed(seed)
        return {"tod": [await provisional_user_turn(context, self.backends[BackendRole.TOD_USER], decoding)]}

    @discard_on_error(DiscardReason.TRANSITION_FAILED)
    async def regeneration(self, state: DialogueState) -> Dict[str, Any]:
        if not self.config.transition.generative:
            return {}
        past = state["chitchat"][-1].text
        future = next(turn.text for turn in state["tod"] if turn.speaker == Speaker.USER)
        candidates = await generate_transitions(
            past,
            future,
            self.backends[BackendRole.TRANSITION],
            self.config.transition.decoding.with_seed(state["seed"]),
            self.config.transition.n_candidates,
        )
        candidates = [normalize_whitespace(candidate) for candidate in candidates]
        template_turn = state["transition"]
        turn = Turn(speaker=template_turn.speaker, text=candidates[0], phase=template_turn.phase, meta=template_turn.meta)
        return {"transition": turn, "candidates": candidates}

    @discard_on_error(DiscardReason.CONTINUATION_FAILED)
    async def simulation(self, state: DialogueState) -> Dict[str, Any]:
        if state["provenance"] != Provenance.SIMULATION:
            return {}
        tod = await simulate_continuation(
            [*state["chitchat"], state["transition"]],
            self.backends[BackendRole.TOD_USER],
            self.backends[BackendRole.TOD_SALES],
            self.config.continuation.policy,
            self.config.continuation.decoding.with_seed(state["seed"]),
            prefix=state["tod"],
        )
        return {"tod": tod}

    @discard_on_error(DiscardReason.INVALID_DIALOGUE)
    async def validation(self, state: DialogueState) -> Dict[str, Any]:
        dialogue = Dialogue(
            id=state["dialogue_id"],
            seed=state["seed"],
            provenance=state["provenance"],
            intent=state["detection"].intent.without_ontology(),
            transition_candidates=tuple(state["candidates"]),
            turns=(*state["chitchat"], state["transition"], *state["tod"]),
        )
        report = validate(dialogue)
        if not report.is_valid:
            logger.warning(f"{dialogue.id}: invalid dialogue: {'; '.join(report.messages)}")
            return {"discard": DiscardReason.INVALID_DIALOGUE, "error": "; ".join(report.messages)}
        return {"dialogue": dialogue}
