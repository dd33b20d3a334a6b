"""
Intent question catalog.

Each intent gets a yes/no detection question: the hand-written one for the
six built-in intents, a description-derived one otherwise. Paraphrases widen
the set of questions asked per intent.
"""

import asyncio
import json
import logging
from pathlib import Path
from typing import List, Sequence

from src.backends.base import ParaphraseBackend
from src.exceptions import CatalogError, SchemaError, ValidationError
from src.models.constants import BASE_QUESTIONS
from src.models.enums import IntentName
from src.models.record_types import CatalogRecord
from src.models.types import IntentLabel, IntentQuestionSet
from src.utils.text import normalize_for_compare, to_gerund_phrase
from src.utils.validation import _validate_required_params

logger = logging.getLogger(__name__)


def base_question_for(intent: IntentLabel) -> str:
    if intent.is_builtin:
        return BASE_QUESTIONS[IntentName(intent.name)]
    return f"Is the user asking about {to_gerund_phrase(intent.description)}?"


def build_question_catalog(intents: Sequence[IntentLabel]) -> List[IntentQuestionSet]:
    """
    One question set per intent, in input order, with no paraphrases yet.

    Raises:
        CatalogError: An intent has an empty description
    """
    catalog = []
    for intent in intents:
        if not intent.description.strip():
            raise CatalogError.empty_description(intent.name)
        catalog.append(IntentQuestionSet(intent=intent, base_question=base_question_for(intent)))
    return catalog


def _merge_paraphrases(question_set: IntentQuestionSet, candidates: Sequence[str], limit: int) -> IntentQuestionSet:
    seen = {normalize_for_compare(question) for question in question_set.questions}
    added: List[str] = []
    for candidate in candidates:
        key = normalize_for_compare(candidate)
        if not key or key in seen:
            continue
        seen.add(key)
        added.append(candidate)
        if len(added) == limit:
            break
    if len(added) < len(candidates):
        logger.debug(f"Dropped {len(candidates) - len(added)} duplicate paraphrase(s) for {question_set.intent.name}")
    return question_set.model_copy(update={"paraphrases": question_set.paraphrases + tuple(added)})


async def augment_with_paraphrases(
    catalog: Sequence[IntentQuestionSet],
    paraphrase_backend: ParaphraseBackend,
    n_per_intent: int = 3,
) -> List[IntentQuestionSet]:
    """
    Add up to ``n_per_intent`` paraphrases of each base question.

    Duplicates of the base question or of each other (after normalization) are
    dropped. Nothing is committed unless every backend call succeeds.
    """
    if n_per_intent <= 0:
        return list(catalog)

    results = await asyncio.gather(
        *(paraphrase_backend.paraphrase(question_set.base_question, n_per_intent) for question_set in catalog)
    )
    augmented = [
        _merge_paraphrases(question_set, candidates, n_per_intent)
        for question_set, candidates in zip(catalog, results)
    ]
    logger.info(f"Augmented {len(augmented)} intents with up to {n_per_intent} paraphrases each")
    return augmented


def save_catalog(path: str | Path, catalog: Sequence[IntentQuestionSet]) -> None:
    records = [
        CatalogRecord(
            intent=question_set.intent.name,
            description=question_set.intent.description,
            base_question=question_set.base_question,
            paraphrases=list(question_set.paraphrases),
        )
        for question_set in catalog
    ]
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(records, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")


def load_catalog(path: str | Path) -> List[IntentQuestionSet]:
    """
    Read a catalog file.

    Raises:
        SchemaError: Malformed JSON or a record missing a required field
    """
    try:
        records = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise SchemaError(f"Catalog {path} is not valid JSON: {e}") from e
    if not isinstance(records, list):
        raise SchemaError(f"Catalog {path} must be a JSON array")

    catalog = []
    for position, record in enumerate(records):
        try:
            _validate_required_params(record, ["intent", "description", "base_question"])
        except ValidationError as e:
            raise SchemaError(f"record {position}: {e.message}", field_errors=e.field_errors) from e
        catalog.append(IntentQuestionSet(
            intent=IntentLabel(name=record["intent"], description=record["description"]),
            base_question=record["base_question"],
            paraphrases=tuple(record.get("paraphrases", [])),
        ))
    return catalog
