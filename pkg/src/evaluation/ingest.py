"""
Completed crowdsourcing annotations.

The answer files are the exported CSVs with answer columns added:

    Task 1: dialogue_id, worker_id, q1..q3
    Task 2: dialogue_id, worker_id, q1..q4, best_idx
    Task 3: snippet_id, worker_id, rank_d1..rank_d3, own_intents (";"-separated)

Other columns are ignored. Rows are numbered as in a spreadsheet: the header
is row 1, the first record row 2.
"""

import csv
import logging
from pathlib import Path
from typing import Any, Callable, Dict, List, Mapping, Tuple, Union

from src.exceptions import AnnotationError, DuplicateAnnotationError, ScoreRangeError
from src.models.constants import (
    DEFAULT_TRANSITION_CANDIDATES,
    INTENT_ORDER,
    NONE_INTENT,
    RANK_MAX,
    RANK_MIN,
    SCORE_MAX,
    SCORE_MIN,
    TASK1_QUESTIONS,
    TASK2_QUESTIONS,
)
from src.models.enums import Detector, EvalTask
from src.models.types import Task1Annotation, Task2Annotation, Task3Annotation

logger = logging.getLogger(__name__)

Annotation = Union[Task1Annotation, Task2Annotation, Task3Annotation]

FIRST_RECORD_ROW = 2
RANK_COLUMNS: Dict[Detector, str] = {detector: f"rank_d{i + 1}" for i, detector in enumerate(Detector)}

REQUIRED_COLUMNS: Dict[EvalTask, List[str]] = {
    EvalTask.CONVERSATION: ["dialogue_id", "worker_id", "q1", "q2", "q3"],
    EvalTask.TRANSITION: ["dialogue_id", "worker_id", "q1", "q2", "q3", "q4", "best_idx"],
    EvalTask.IMPLICIT_INTENT: ["snippet_id", "worker_id", *RANK_COLUMNS.values(), "own_intents"],
}


def _int_in_range(row: Mapping[str, str], column: str, low: int, high: int, row_number: int) -> int:
    raw = (row.get(column) or "").strip()
    try:
        value = int(raw)
    except ValueError:
        raise ScoreRangeError.out_of_range(column, raw or "<empty>", low, high, row_number) from None
    if not low <= value <= high:
        raise ScoreRangeError.out_of_range(column, value, low, high, row_number)
    return value


def _required_text(row: Mapping[str, str], column: str, row_number: int) -> str:
    value = (row.get(column) or "").strip()
    if not value:
        raise AnnotationError(f"Row {row_number}: {column} is empty", rows=[row_number], invalid_fields=[column])
    return value


def parse_own_intents(raw: str, row_number: int) -> Tuple[str, ...]:
    """Semicolon-separated intent names; empty or "None" means no intent."""
    names = [part.strip() for part in raw.split(";") if part.strip()]
    if not names or [name.upper() for name in names] == [NONE_INTENT]:
        return (NONE_INTENT,)
    unknown = [name for name in names if name not in INTENT_ORDER]
    if unknown:
        raise AnnotationError(
            f"Row {row_number}: own_intents names unknown intents {unknown}",
            rows=[row_number],
            invalid_fields=["own_intents"],
        )
    return tuple(dict.fromkeys(names))


def _task1(row: Mapping[str, str], row_number: int) -> Task1Annotation:
    scores = {
        question: _int_in_range(row, f"q{i + 1}", SCORE_MIN, SCORE_MAX, row_number)
        for i, question in enumerate(TASK1_QUESTIONS)
    }
    return Task1Annotation(
        dialogue_id=_required_text(row, "dialogue_id", row_number),
        worker_id=_required_text(row, "worker_id", row_number),
        **scores,
    )


def _task2(row: Mapping[str, str], row_number: int) -> Task2Annotation:
    scores = {
        question: _int_in_range(row, f"q{i + 1}", SCORE_MIN, SCORE_MAX, row_number)
        for i, question in enumerate(TASK2_QUESTIONS)
    }
    return Task2Annotation(
        dialogue_id=_required_text(row, "dialogue_id", row_number),
        worker_id=_required_text(row, "worker_id", row_number),
        best_candidate_index=_int_in_range(row, "best_idx", 0, DEFAULT_TRANSITION_CANDIDATES - 1, row_number),
        **scores,
    )


def _task3(row: Mapping[str, str], row_number: int) -> Task3Annotation:
    ranks = {
        detector: _int_in_range(row, column, RANK_MIN, RANK_MAX, row_number)
        for detector, column in RANK_COLUMNS.items()
    }
    return Task3Annotation(
        snippet_id=_required_text(row, "snippet_id", row_number),
        worker_id=_required_text(row, "worker_id", row_number),
        rank_per_detector=ranks,
        own_intents=parse_own_intents(row.get("own_intents") or "", row_number),
    )


PARSERS: Dict[EvalTask, Callable[[Mapping[str, str], int], Any]] = {
    EvalTask.CONVERSATION: _task1,
    EvalTask.TRANSITION: _task2,
    EvalTask.IMPLICIT_INTENT: _task3,
}


def ingest_annotations(path: str | Path, task: EvalTask | int) -> List[Annotation]:
    """
    Read and range-check a completed annotation file.

    Args:
        path: CSV with the task's answer columns
        task: 1, 2 or 3

    Returns:
        One annotation per row, in file order

    Raises:
        AnnotationError: Missing columns, empty ids or unknown intents
        ScoreRangeError: A score, rank or candidate index is out of range
        DuplicateAnnotationError: The same worker annotated an item twice
    """
    task = EvalTask(task)
    path = Path(path)
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        missing = [column for column in REQUIRED_COLUMNS[task] if column not in (reader.fieldnames or [])]
        if missing:
            raise AnnotationError(f"{path}: missing columns {missing}", invalid_fields=missing)

        parse = PARSERS[task]
        annotations: List[Annotation] = []
        first_seen: Dict[Tuple[str, str], int] = {}
        for row_number, row in enumerate(reader, start=FIRST_RECORD_ROW):
            annotation = parse(row, row_number)
            key = (annotation.item_id, annotation.worker_id)
            if key in first_seen:
                raise DuplicateAnnotationError.duplicate(*key, rows=[first_seen[key], row_number])
            first_seen[key] = row_number
            annotations.append(annotation)

    logger.info(f"Ingested {len(annotations)} Task {int(task)} annotations from {path}")
    return annotations
